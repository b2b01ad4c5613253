#ifndef UNSEEN_LP_HPP
#define UNSEEN_LP_HPP

#include <cstddef>
#include <string>
#include <vector>

// Self-contained dense linear-program solver.  Revised primal simplex,
// two phases, explicit basis inverse refreshed by refactorization.
// Robustness over speed: instances here stay at desk scale.

namespace unseen {

enum class Relation { le, eq, ge };

enum class LpStatus { optimal, infeasible, unbounded, failed };

// min (or max) c'x  subject to  A x (<=,=,>=) b,  lo <= x <= up.
// Infinite bounds are allowed (+-inf).
struct LpProblem {
  bool maximize = false;
  std::vector<double> objective;          // length n
  std::vector<double> matrix;             // row-major, m x n
  std::vector<Relation> relations;        // length m
  std::vector<double> rhs;                // length m
  std::vector<double> lower;              // length n, -inf allowed
  std::vector<double> upper;              // length n, +inf allowed

  std::size_t n_rows() const { return rhs.size(); }
  std::size_t n_cols() const { return objective.size(); }
  double at(std::size_t r, std::size_t c) const { return matrix[r * n_cols() + c]; }

  // Fresh problem with n free variables and no rows.
  static LpProblem with_free_vars(std::size_t n);

  void add_row(const std::vector<double>& coeffs, Relation rel, double rhs_value);
  // Sparse row: (index, coeff) pairs.
  void add_row_sparse(const std::vector<std::pair<std::size_t, double>>& entries, Relation rel,
                      double rhs_value);
  void set_bounds(std::size_t var, double lo, double up);
  void validate() const;

  // Fixed-format text dump (MPS layout) for debugging.
  std::string dump_fixed_format(const std::string& name = "UNSEENLP") const;
};

struct LpSolution {
  LpStatus status = LpStatus::failed;
  double objective = 0.0;
  std::vector<double> primal;             // length n of the original problem
  std::vector<double> dual;               // length m, multipliers for original rows
  double primal_residual = 0.0;           // max row violation
  double duality_gap = 0.0;               // |primal obj - dual obj|
  double complementarity = 0.0;           // max |reduced cost * slack-from-bound|
  int iterations = 0;
  std::string message;

  bool ok() const { return status == LpStatus::optimal; }
};

LpSolution lp_solve(const LpProblem& problem);

// min over g of ||A g - h||_inf + t ||g||_inf, encoded with two auxiliary
// scalars (u bounds the residuals, v bounds g).  Variable order in the
// returned problem: g (free, size n_cols(A)), then u, then v.
LpProblem reduce_linf_objective(const std::vector<double>& a_matrix, std::size_t m,
                                std::size_t n, const std::vector<double>& h, double t);

}  // namespace unseen

#endif
