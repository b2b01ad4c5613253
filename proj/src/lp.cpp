#include "unseen/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace unseen {

namespace {

constexpr double kPivotTol = 1e-10;   // minimum admissible pivot magnitude
constexpr double kFeasTol = 1e-8;     // row feasibility tolerance
constexpr double kCostTol = 1e-9;     // reduced-cost tolerance for entering

// Revised primal simplex on the computational form
//   min c'x  s.t.  A x = b,  x >= 0,  b >= 0,
// with an explicit basis inverse updated per pivot and refactorized from
// scratch every 50 pivots.  Entering variable: most negative reduced cost,
// ties by lowest index; after 3*(rows+cols) degenerate pivots the rule
// switches to Bland's (first negative) which precludes cycling.
class SimplexCore {
 public:
  SimplexCore(std::size_t m, std::size_t n) : m_(m), n_(n), cols_(m * n, 0.0), b_(m, 0.0) {}

  void set_entry(std::size_t row, std::size_t col, double v) { cols_[col * m_ + row] = v; }
  void set_rhs(std::size_t row, double v) { b_[row] = v; }
  double* column(std::size_t col) { return &cols_[col * m_]; }

  // Runs phase 1 (artificials appended internally) then phase 2 on `cost`.
  // initial_basis[r] >= 0 proposes a starting basic column for row r (used
  // for +1 slacks, which makes pure <=-systems skip phase 1 entirely).
  LpStatus run(const std::vector<double>& cost, const std::vector<int>& initial_basis,
               std::vector<double>& x_out, std::vector<double>& y_out, int& iterations,
               std::string& message);

  std::size_t n_cols_core() const { return n_; }
  const double* col_data(std::size_t j) const { return &cols_[j * m_]; }

 private:
  std::size_t m_, n_;
  std::vector<double> cols_;     // column-major A, m_ x n_
  std::vector<double> b_;
  std::vector<int> basis_;       // basis_[row] = column index (>= n_ means artificial)
  std::vector<char> is_basic_;
  std::vector<double> binv_;     // m_ x m_ row-major
  std::vector<double> xb_;       // basic variable values
  std::vector<double> art_cols_; // identity columns for artificials (implicit)
  int pivots_since_refactor_ = 0;
  long degenerate_pivots_ = 0;
  bool bland_ = false;

  const double* col_ptr(std::size_t j) const { return &cols_[j * m_]; }

  bool refactor();
  void compute_xb();
  void apply_pivot(std::size_t leave_row, const std::vector<double>& w);
  LpStatus optimize(const std::vector<double>& full_cost, std::size_t n_total,
                    const std::vector<char>& usable, long max_iter, int& iterations,
                    std::string& message);
};

bool SimplexCore::refactor() {
  // Gauss-Jordan inversion with partial pivoting of the current basis matrix.
  std::size_t m = m_;
  std::vector<double> work(m * m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      int j = basis_[c];
      work[r * m + c] = (j >= static_cast<int>(n_)) ? (static_cast<std::size_t>(j - n_) == r ? 1.0 : 0.0)
                                                    : col_ptr(static_cast<std::size_t>(j))[r];
    }
  binv_.assign(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) binv_[i * m + i] = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t piv = k;
    double best = std::fabs(work[k * m + k]);
    for (std::size_t r = k + 1; r < m; ++r) {
      double v = std::fabs(work[r * m + k]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < kPivotTol) return false;
    if (piv != k) {
      for (std::size_t c = 0; c < m; ++c) {
        std::swap(work[piv * m + c], work[k * m + c]);
        std::swap(binv_[piv * m + c], binv_[k * m + c]);
      }
    }
    double inv = 1.0 / work[k * m + k];
    for (std::size_t c = 0; c < m; ++c) {
      work[k * m + c] *= inv;
      binv_[k * m + c] *= inv;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == k) continue;
      double f = work[r * m + k];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < m; ++c) {
        work[r * m + c] -= f * work[k * m + c];
        binv_[r * m + c] -= f * binv_[k * m + c];
      }
    }
  }
  pivots_since_refactor_ = 0;
  return true;
}

void SimplexCore::compute_xb() {
  xb_.assign(m_, 0.0);
  for (std::size_t r = 0; r < m_; ++r) {
    double s = 0.0;
    const double* row = &binv_[r * m_];
    for (std::size_t c = 0; c < m_; ++c) s += row[c] * b_[c];
    xb_[r] = s > -kFeasTol && s < 0.0 ? 0.0 : s;
  }
}

void SimplexCore::apply_pivot(std::size_t leave_row, const std::vector<double>& w) {
  double inv = 1.0 / w[leave_row];
  double* prow = &binv_[leave_row * m_];
  for (std::size_t c = 0; c < m_; ++c) prow[c] *= inv;
  for (std::size_t r = 0; r < m_; ++r) {
    if (r == leave_row) continue;
    double f = w[r];
    if (f == 0.0) continue;
    double* row = &binv_[r * m_];
    for (std::size_t c = 0; c < m_; ++c) row[c] -= f * prow[c];
  }
  ++pivots_since_refactor_;
}

LpStatus SimplexCore::optimize(const std::vector<double>& full_cost, std::size_t n_total,
                               const std::vector<char>& usable, long max_iter, int& iterations,
                               std::string& message) {
  std::vector<double> y(m_), w(m_);
  const long bland_threshold = 3 * static_cast<long>(m_ + n_total);
  for (long iter = 0; iter < max_iter; ++iter) {
    ++iterations;
    // dual prices y = c_B' * Binv
    for (std::size_t c = 0; c < m_; ++c) {
      double s = 0.0;
      for (std::size_t r = 0; r < m_; ++r) {
        double cb = full_cost[static_cast<std::size_t>(basis_[r])];
        if (cb != 0.0) s += cb * binv_[r * m_ + c];
      }
      y[c] = s;
    }
    // pricing
    int enter = -1;
    double best = -kCostTol;
    for (std::size_t j = 0; j < n_total; ++j) {
      if (!usable[j] || is_basic_[j]) continue;
      double d;
      if (j < n_) {
        const double* col = col_ptr(j);
        double s = 0.0;
        for (std::size_t r = 0; r < m_; ++r) s += y[r] * col[r];
        d = full_cost[j] - s;
      } else {
        d = full_cost[j] - y[j - n_];
      }
      if (bland_) {
        if (d < -kCostTol) {
          enter = static_cast<int>(j);
          break;
        }
      } else if (d < best) {
        best = d;
        enter = static_cast<int>(j);
      }
    }
    if (enter < 0) return LpStatus::optimal;

    // direction w = Binv * A_enter
    if (static_cast<std::size_t>(enter) < n_) {
      const double* col = col_ptr(static_cast<std::size_t>(enter));
      for (std::size_t r = 0; r < m_; ++r) {
        double s = 0.0;
        const double* row = &binv_[r * m_];
        for (std::size_t c = 0; c < m_; ++c) s += row[c] * col[c];
        w[r] = s;
      }
    } else {
      std::size_t art_row = static_cast<std::size_t>(enter) - n_;
      for (std::size_t r = 0; r < m_; ++r) w[r] = binv_[r * m_ + art_row];
    }

    // ratio test; ties resolved toward the lowest basis column index
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m_; ++r) {
      if (w[r] <= kPivotTol) continue;
      double ratio = std::max(xb_[r], 0.0) / w[r];
      if (ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 && leave >= 0 && basis_[r] < basis_[leave])) {
        best_ratio = ratio;
        leave = static_cast<int>(r);
      }
    }
    if (leave < 0) return LpStatus::unbounded;

    if (best_ratio < kPivotTol) {
      ++degenerate_pivots_;
      if (!bland_ && degenerate_pivots_ > bland_threshold) bland_ = true;
    }

    // update basic values and swap basis
    for (std::size_t r = 0; r < m_; ++r) xb_[r] -= best_ratio * w[r];
    xb_[static_cast<std::size_t>(leave)] = best_ratio;
    is_basic_[static_cast<std::size_t>(basis_[leave])] = 0;
    is_basic_[static_cast<std::size_t>(enter)] = 1;
    basis_[leave] = enter;
    apply_pivot(static_cast<std::size_t>(leave), w);

    if (pivots_since_refactor_ >= 50) {
      if (!refactor()) {
        // retry once under Bland's rule with a fresh factorization attempt
        if (!bland_) {
          bland_ = true;
          if (refactor()) {
            compute_xb();
            continue;
          }
        }
        message = "numerically singular basis after anti-cycling retry";
        return LpStatus::failed;
      }
      compute_xb();
    }
  }
  message = "iteration limit exceeded";
  return LpStatus::failed;
}

LpStatus SimplexCore::run(const std::vector<double>& cost, const std::vector<int>& initial_basis,
                          std::vector<double>& x_out, std::vector<double>& y_out, int& iterations,
                          std::string& message) {
  std::size_t n_total = n_ + m_;  // artificials occupy indices n_..n_+m_-1
  basis_.resize(m_);
  is_basic_.assign(n_total, 0);
  for (std::size_t r = 0; r < m_; ++r) {
    int j = (r < initial_basis.size()) ? initial_basis[r] : -1;
    basis_[r] = (j >= 0) ? j : static_cast<int>(n_ + r);
    is_basic_[static_cast<std::size_t>(basis_[r])] = 1;
  }
  if (!refactor()) {
    message = "initial factorization failed";
    return LpStatus::failed;
  }
  compute_xb();

  const long max_iter = 20000 + 200 * static_cast<long>(m_ + n_total);

  // Phase 1: minimize the sum of artificials.
  std::vector<double> phase1_cost(n_total, 0.0);
  for (std::size_t r = 0; r < m_; ++r) phase1_cost[n_ + r] = 1.0;
  std::vector<char> usable(n_total, 1);
  bool any_artificial_basic = false;
  for (std::size_t r = 0; r < m_; ++r)
    if (basis_[r] >= static_cast<int>(n_)) any_artificial_basic = true;
  if (any_artificial_basic) {
    LpStatus st = optimize(phase1_cost, n_total, usable, max_iter, iterations, message);
    if (st == LpStatus::failed) return st;
    double art_sum = 0.0;
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] >= static_cast<int>(n_)) art_sum += std::max(xb_[r], 0.0);
    double scale = 1.0;
    for (double bv : b_) scale = std::max(scale, std::fabs(bv));
    if (art_sum > kFeasTol * scale) return LpStatus::infeasible;
    // pivot lingering artificials out where possible
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < static_cast<int>(n_)) continue;
      int replacement = -1;
      for (std::size_t j = 0; j < n_; ++j) {
        if (is_basic_[j]) continue;
        const double* col = col_ptr(j);
        double wr = 0.0;
        const double* row = &binv_[r * m_];
        for (std::size_t c = 0; c < m_; ++c) wr += row[c] * col[c];
        if (std::fabs(wr) > 1e-7) {
          replacement = static_cast<int>(j);
          break;
        }
      }
      if (replacement >= 0) {
        std::vector<double> w(m_);
        const double* col = col_ptr(static_cast<std::size_t>(replacement));
        for (std::size_t rr = 0; rr < m_; ++rr) {
          double s = 0.0;
          const double* row = &binv_[rr * m_];
          for (std::size_t c = 0; c < m_; ++c) s += row[c] * col[c];
          w[rr] = s;
        }
        is_basic_[static_cast<std::size_t>(basis_[r])] = 0;
        is_basic_[static_cast<std::size_t>(replacement)] = 1;
        basis_[r] = replacement;
        apply_pivot(r, w);
      }
      // else: redundant row, the artificial stays basic at zero with cost 0
    }
  }
  // artificials may no longer enter
  for (std::size_t j = n_; j < n_total; ++j)
    if (!is_basic_[j]) usable[j] = 0;

  // Phase 2.
  std::vector<double> phase2_cost(cost);
  phase2_cost.resize(n_total, 0.0);
  LpStatus st = optimize(phase2_cost, n_total, usable, max_iter, iterations, message);
  if (st != LpStatus::optimal) return st;

  if (!refactor()) {
    message = "final factorization failed";
    return LpStatus::failed;
  }
  compute_xb();

  x_out.assign(n_, 0.0);
  for (std::size_t r = 0; r < m_; ++r)
    if (basis_[r] < static_cast<int>(n_)) x_out[static_cast<std::size_t>(basis_[r])] = std::max(xb_[r], 0.0);
  y_out.assign(m_, 0.0);
  for (std::size_t c = 0; c < m_; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < m_; ++r) {
      double cb = phase2_cost[static_cast<std::size_t>(basis_[r])];
      if (cb != 0.0) s += cb * binv_[r * m_ + c];
    }
    y_out[c] = s;
  }
  return LpStatus::optimal;
}

}  // namespace

// ---- LpProblem ------------------------------------------------------------

LpProblem LpProblem::with_free_vars(std::size_t n) {
  LpProblem p;
  p.objective.assign(n, 0.0);
  p.lower.assign(n, -kInf);
  p.upper.assign(n, kInf);
  return p;
}

void LpProblem::add_row(const std::vector<double>& coeffs, Relation rel, double rhs_value) {
  if (coeffs.size() != n_cols()) throw std::invalid_argument("add_row: coefficient size mismatch");
  matrix.insert(matrix.end(), coeffs.begin(), coeffs.end());
  relations.push_back(rel);
  rhs.push_back(rhs_value);
}

void LpProblem::add_row_sparse(const std::vector<std::pair<std::size_t, double>>& entries,
                               Relation rel, double rhs_value) {
  std::vector<double> coeffs(n_cols(), 0.0);
  for (const auto& [idx, v] : entries) {
    if (idx >= n_cols()) throw std::invalid_argument("add_row_sparse: index out of range");
    coeffs[idx] += v;
  }
  add_row(coeffs, rel, rhs_value);
}

void LpProblem::set_bounds(std::size_t var, double lo, double up) {
  if (var >= n_cols()) throw std::invalid_argument("set_bounds: index out of range");
  if (lo > up) throw std::invalid_argument("set_bounds: lower above upper");
  lower[var] = lo;
  upper[var] = up;
}

void LpProblem::validate() const {
  if (lower.size() != n_cols() || upper.size() != n_cols())
    throw std::invalid_argument("LpProblem: bound vectors sized wrong");
  if (matrix.size() != n_rows() * n_cols())
    throw std::invalid_argument("LpProblem: matrix shape inconsistent");
  if (relations.size() != n_rows()) throw std::invalid_argument("LpProblem: relations sized wrong");
  for (double v : matrix)
    if (!std::isfinite(v)) throw std::invalid_argument("LpProblem: non-finite coefficient");
  for (double v : rhs)
    if (!std::isfinite(v)) throw std::invalid_argument("LpProblem: non-finite rhs");
  for (double v : objective)
    if (!std::isfinite(v)) throw std::invalid_argument("LpProblem: non-finite objective");
}

// ---- lp_solve: reduction to computational form ----------------------------

LpSolution lp_solve(const LpProblem& problem) {
  problem.validate();
  LpSolution sol;
  const std::size_t n = problem.n_cols();
  const std::size_t m = problem.n_rows();

  // Variable mapping.  Finite lower bound: x = lo + x'.  Lower -inf with
  // finite upper: x = up - x'.  Doubly free: x = x+ - x-.  Finite two-sided
  // bounds additionally get a row x' <= up - lo.
  struct VarMap {
    std::size_t pos;        // computational index of the (first) part
    int kind;               // 0: shifted-up, 1: mirrored, 2: split
    double shift;           // lo (kind 0) or up (kind 1)
  };
  std::vector<VarMap> vmap(n);
  std::size_t n_comp = 0;
  std::size_t extra_rows = 0;
  for (std::size_t j = 0; j < n; ++j) {
    double lo = problem.lower[j], up = problem.upper[j];
    if (std::isfinite(lo)) {
      vmap[j] = {n_comp, 0, lo};
      n_comp += 1;
      if (std::isfinite(up)) ++extra_rows;
    } else if (std::isfinite(up)) {
      vmap[j] = {n_comp, 1, up};
      n_comp += 1;
    } else {
      vmap[j] = {n_comp, 2, 0.0};
      n_comp += 2;
    }
  }

  const std::size_t m_comp = m + extra_rows;
  // slack count: one per inequality row; bound rows are <= hence get slacks
  std::vector<int> slack_of_row(m_comp, -1);
  std::size_t n_slacks = 0;
  for (std::size_t r = 0; r < m; ++r)
    if (problem.relations[r] != Relation::eq) slack_of_row[r] = static_cast<int>(n_slacks++);
  for (std::size_t r = m; r < m_comp; ++r) slack_of_row[r] = static_cast<int>(n_slacks++);

  const std::size_t n_total = n_comp + n_slacks;
  SimplexCore core(m_comp, n_total);

  const double sign_obj = problem.maximize ? -1.0 : 1.0;
  std::vector<double> cost(n_total, 0.0);
  double obj_shift = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double cj = sign_obj * problem.objective[j];
    const VarMap& vm = vmap[j];
    switch (vm.kind) {
      case 0:
        cost[vm.pos] = cj;
        obj_shift += cj * vm.shift;
        break;
      case 1:
        cost[vm.pos] = -cj;
        obj_shift += cj * vm.shift;
        break;
      case 2:
        cost[vm.pos] = cj;
        cost[vm.pos + 1] = -cj;
        break;
    }
  }

  // rows: substitute variables, then normalize rhs >= 0 (row flip)
  std::vector<double> row_sign(m_comp, 1.0);
  std::vector<double> rhs_comp(m_comp, 0.0);
  std::vector<int> initial_basis(m_comp, -1);
  std::vector<double> dense(n);
  for (std::size_t r = 0; r < m_comp; ++r) {
    Relation rel;
    double rhs_value;
    if (r < m) {
      rel = problem.relations[r];
      for (std::size_t j = 0; j < n; ++j) dense[j] = problem.at(r, j);
      rhs_value = problem.rhs[r];
    } else {
      // upper-bound row for the (r-m)-th doubly-bounded variable
      std::size_t k = r - m, seen = 0;
      std::size_t target = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (std::isfinite(problem.lower[j]) && std::isfinite(problem.upper[j])) {
          if (seen == k) {
            target = j;
            break;
          }
          ++seen;
        }
      }
      std::fill(dense.begin(), dense.end(), 0.0);
      dense[target] = 1.0;
      rel = Relation::le;
      rhs_value = problem.upper[target];
    }
    // substitute bounds into rhs
    for (std::size_t j = 0; j < n; ++j) {
      if (dense[j] == 0.0) continue;
      const VarMap& vm = vmap[j];
      if (vm.kind == 0 || vm.kind == 1) rhs_value -= dense[j] * vm.shift;
    }
    double sgn = 1.0;
    if (rhs_value < 0.0) {
      sgn = -1.0;
      rhs_value = -rhs_value;
      if (rel == Relation::le)
        rel = Relation::ge;
      else if (rel == Relation::ge)
        rel = Relation::le;
    }
    row_sign[r] = sgn;
    for (std::size_t j = 0; j < n; ++j) {
      if (dense[j] == 0.0) continue;
      const VarMap& vm = vmap[j];
      double a = sgn * dense[j];
      switch (vm.kind) {
        case 0:
          core.set_entry(r, vm.pos, a);
          break;
        case 1:
          core.set_entry(r, vm.pos, -a);
          break;
        case 2:
          core.set_entry(r, vm.pos, a);
          core.set_entry(r, vm.pos + 1, -a);
          break;
      }
    }
    if (slack_of_row[r] >= 0) {
      double s = (rel == Relation::le) ? 1.0 : -1.0;
      core.set_entry(r, n_comp + static_cast<std::size_t>(slack_of_row[r]), s);
      if (s > 0.0) initial_basis[r] = static_cast<int>(n_comp + static_cast<std::size_t>(slack_of_row[r]));
    }
    core.set_rhs(r, rhs_value);
    rhs_comp[r] = rhs_value;
  }

  std::vector<double> x_comp, y_comp;
  sol.status = core.run(cost, initial_basis, x_comp, y_comp, sol.iterations, sol.message);
  if (sol.status != LpStatus::optimal) return sol;

  // map back
  sol.primal.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const VarMap& vm = vmap[j];
    switch (vm.kind) {
      case 0: sol.primal[j] = vm.shift + x_comp[vm.pos]; break;
      case 1: sol.primal[j] = vm.shift - x_comp[vm.pos]; break;
      case 2: sol.primal[j] = x_comp[vm.pos] - x_comp[vm.pos + 1]; break;
    }
  }
  double obj = 0.0;
  for (std::size_t j = 0; j < n; ++j) obj += problem.objective[j] * sol.primal[j];
  sol.objective = obj;

  // duals for original rows, oriented so that for a minimization problem
  // dual_objective = sum_r y_r * rhs_r (plus bound terms); maximize flips sign
  sol.dual.assign(m, 0.0);
  for (std::size_t r = 0; r < m; ++r) sol.dual[r] = sign_obj * row_sign[r] * y_comp[r];

  // certificates: feasibility residual, duality gap, complementarity
  double resid = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    double ax = 0.0;
    for (std::size_t j = 0; j < n; ++j) ax += problem.at(r, j) * sol.primal[j];
    double v = 0.0;
    switch (problem.relations[r]) {
      case Relation::le: v = std::max(0.0, ax - problem.rhs[r]); break;
      case Relation::ge: v = std::max(0.0, problem.rhs[r] - ax); break;
      case Relation::eq: v = std::fabs(ax - problem.rhs[r]); break;
    }
    resid = std::max(resid, v);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isfinite(problem.lower[j]))
      resid = std::max(resid, problem.lower[j] - sol.primal[j]);
    if (std::isfinite(problem.upper[j]))
      resid = std::max(resid, sol.primal[j] - problem.upper[j]);
  }
  sol.primal_residual = std::max(resid, 0.0);

  // dual objective against the computational rhs (bound rows included)
  double dual_obj_comp = 0.0;
  for (std::size_t r = 0; r < m_comp; ++r) dual_obj_comp += y_comp[r] * rhs_comp[r];
  double primal_obj_comp = sign_obj * obj - obj_shift;
  sol.duality_gap = std::fabs(primal_obj_comp - dual_obj_comp);

  // complementarity: max |x_j * reduced_cost_j| over computational columns
  double comp = 0.0;
  for (std::size_t j = 0; j < core.n_cols_core(); ++j) {
    if (x_comp.size() <= j) break;
    if (x_comp[j] == 0.0) continue;
    const double* col = core.col_data(j);
    double d = (j < cost.size() ? cost[j] : 0.0);
    for (std::size_t r = 0; r < m_comp; ++r) d -= y_comp[r] * col[r];
    comp = std::max(comp, std::fabs(x_comp[j] * d));
  }
  sol.complementarity = comp;
  return sol;
}

// ---- reductions -----------------------------------------------------------

LpProblem reduce_linf_objective(const std::vector<double>& a_matrix, std::size_t m, std::size_t n,
                                const std::vector<double>& h, double t) {
  if (a_matrix.size() != m * n) throw std::invalid_argument("reduce_linf_objective: bad matrix size");
  if (h.size() != m) throw std::invalid_argument("reduce_linf_objective: bad rhs size");
  if (t < 0.0) throw std::invalid_argument("reduce_linf_objective: negative t");
  // variables: g_0..g_{n-1} free, then u >= 0, v >= 0
  LpProblem p = LpProblem::with_free_vars(n + 2);
  const std::size_t u = n, v = n + 1;
  p.set_bounds(u, 0.0, kInf);
  p.set_bounds(v, 0.0, kInf);
  p.objective[u] = 1.0;
  p.objective[v] = t;
  std::vector<double> row(n + 2, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = a_matrix[i * n + j];
    row[u] = -1.0;
    row[v] = 0.0;
    p.add_row(row, Relation::le, h[i]);       //  (Ag)_i - u <= h_i
    for (std::size_t j = 0; j < n; ++j) row[j] = -a_matrix[i * n + j];
    p.add_row(row, Relation::le, -h[i]);      // -(Ag)_i - u <= -h_i
  }
  std::fill(row.begin(), row.end(), 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    row[j] = 1.0;
    row[v] = -1.0;
    p.add_row(row, Relation::le, 0.0);        //  g_j - v <= 0
    row[j] = -1.0;
    p.add_row(row, Relation::le, 0.0);        // -g_j - v <= 0
    row[j] = 0.0;
  }
  return p;
}

// ---- fixed-format dump ----------------------------------------------------

std::string LpProblem::dump_fixed_format(const std::string& name) const {
  // Classic fixed-field layout: indicator in columns 2-3, names in columns
  // 5-12 and 15-22, values in columns 25-36 and 50-61.
  std::string out;
  char buf[128];
  auto emit = [&out](const char* s) { out += s; };
  std::snprintf(buf, sizeof buf, "NAME          %s\n", name.c_str());
  emit(buf);
  emit((maximize ? "* sense: MAXIMIZE\n" : "* sense: MINIMIZE\n"));
  emit("ROWS\n");
  emit(" N  COST\n");
  for (std::size_t r = 0; r < n_rows(); ++r) {
    char rel = relations[r] == Relation::le ? 'L' : relations[r] == Relation::ge ? 'G' : 'E';
    std::snprintf(buf, sizeof buf, " %c  R%07zu\n", rel, r);
    emit(buf);
  }
  emit("COLUMNS\n");
  for (std::size_t j = 0; j < n_cols(); ++j) {
    if (objective[j] != 0.0) {
      std::snprintf(buf, sizeof buf, "    X%07zu  COST      %12.6g\n", j, objective[j]);
      emit(buf);
    }
    for (std::size_t r = 0; r < n_rows(); ++r) {
      double v = at(r, j);
      if (v == 0.0) continue;
      std::snprintf(buf, sizeof buf, "    X%07zu  R%07zu  %12.6g\n", j, r, v);
      emit(buf);
    }
  }
  emit("RHS\n");
  for (std::size_t r = 0; r < n_rows(); ++r) {
    if (rhs[r] == 0.0) continue;
    std::snprintf(buf, sizeof buf, "    RHS       R%07zu  %12.6g\n", r, rhs[r]);
    emit(buf);
  }
  emit("BOUNDS\n");
  for (std::size_t j = 0; j < n_cols(); ++j) {
    bool lo_fin = std::isfinite(lower[j]), up_fin = std::isfinite(upper[j]);
    if (lo_fin && lower[j] == 0.0 && !up_fin) continue;  // default bound
    if (!lo_fin && !up_fin) {
      std::snprintf(buf, sizeof buf, " FR BND       X%07zu\n", j);
      emit(buf);
      continue;
    }
    if (lo_fin) {
      std::snprintf(buf, sizeof buf, " LO BND       X%07zu  %12.6g\n", j, lower[j]);
      emit(buf);
    } else {
      std::snprintf(buf, sizeof buf, " MI BND       X%07zu\n", j);
      emit(buf);
    }
    if (up_fin) {
      std::snprintf(buf, sizeof buf, " UP BND       X%07zu  %12.6g\n", j, upper[j]);
      emit(buf);
    }
  }
  emit("ENDATA\n");
  return out;
}

}  // namespace unseen
