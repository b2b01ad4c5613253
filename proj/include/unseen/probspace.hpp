#ifndef UNSEEN_PROBSPACE_HPP
#define UNSEEN_PROBSPACE_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

// Finite-support distributions, signed measures, kernels and the
// f-divergence toolkit shared by every other component.
//
// Conventions used throughout:
//  * for a pair of probability vectors, tv_distance() is the half-L1
//    distance in [0,1];
//  * for signed weight vectors fed into linear programs, norms mean the
//    full L1 mass sum|w_i| (see SignedMeasure::l1_norm).  Conversions
//    between the two are explicit at call sites.
//  * divergences return +infinity as an ordinary value instead of
//    throwing; optimization code treats infeasible pairs as excluded.

namespace unseen {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class GridKind { integer, real };

// Strictly increasing, nonempty list of nonnegative support points.
// Hosts both parameter grids (theta) and observation grids (x).
struct SupportGrid {
  std::vector<double> points;
  GridKind kind = GridKind::real;

  SupportGrid() = default;
  SupportGrid(std::vector<double> pts, GridKind k);

  std::size_t size() const { return points.size(); }
  double operator[](std::size_t i) const { return points[i]; }
  bool same_as(const SupportGrid& other) const;

  static SupportGrid integers(std::size_t count);              // 0,1,...,count-1
  static SupportGrid linspace(double lo, double hi, std::size_t count);
};

// Probability vector on a grid.  Weights are nonnegative and sum to one
// within 1e-12 (checked at construction).
struct DiscreteDistribution {
  SupportGrid grid;
  std::vector<double> weights;

  DiscreteDistribution() = default;
  DiscreteDistribution(SupportGrid g, std::vector<double> w);

  std::size_t size() const { return weights.size(); }
  double mean() const;

  static DiscreteDistribution point_mass(SupportGrid g, std::size_t index);
  static DiscreteDistribution uniform(SupportGrid g);
};

// Real-weighted vector on a grid (perturbations Delta, prior differences).
struct SignedMeasure {
  SupportGrid grid;
  std::vector<double> weights;

  SignedMeasure() = default;
  SignedMeasure(SupportGrid g, std::vector<double> w);

  std::size_t size() const { return weights.size(); }
  double l1_norm() const;     // sum |w_i|
  double total() const;       // sum w_i
};

// Row-stochastic conditional matrix P(x|theta) over finite grids.
// Truncated rows (Poisson) record the chopped-off tail mass per row so it
// is never silently dropped; by construction tail_mass[r] <= 1e-9.
struct Kernel {
  SupportGrid theta_grid;
  SupportGrid x_grid;
  std::vector<double> rows;       // row-major, theta_grid.size() x x_grid.size()
  std::vector<double> tail_mass;  // one entry per row

  std::size_t n_theta() const { return theta_grid.size(); }
  std::size_t n_x() const { return x_grid.size(); }
  double at(std::size_t t, std::size_t x) const { return rows[t * n_x() + x]; }

  void validate() const;  // throws std::invalid_argument on broken invariants
};

// Observation counts per symbol plus the derived profile
// Phi_j = #{symbols observed exactly j times}.
struct Histogram {
  std::vector<std::int64_t> counts;

  std::vector<std::int64_t> profile() const;   // index j -> Phi_j, j=0..max count
  std::int64_t total_observations() const;
  std::int64_t distinct_observed() const;      // #{x : count > 0}
};

// ---- divergences ----------------------------------------------------------

double tv_distance(const DiscreteDistribution& p, const DiscreteDistribution& q);
double hellinger_sq(const DiscreteDistribution& p, const DiscreteDistribution& q);
double chi2_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q);

// (1+chi2)^n - 1, monotone in both arguments; computed via expm1/log1p so
// tiny chi2 values do not lose precision.
double chi2_tensorize(double chi2, std::int64_t n);

// ---- kernel actions -------------------------------------------------------

// Mixture (pi P)(x) = sum_theta pi(theta) P(x|theta); the truncation
// residual (< 1e-9 total) is renormalized proportionally.
DiscreteDistribution mix(const Kernel& kernel, const DiscreteDistribution& pi);
std::vector<double> mix_weights(const Kernel& kernel, const std::vector<double>& pi_weights);

// Adjoint action (Pg)(theta) = sum_x P(x|theta) g(x); linear in g and
// adjoint to mix: <mix(P,pi), g> == <pi, push(P,g)> exactly.
std::vector<double> push(const Kernel& kernel, const std::vector<double>& g);

// ---- kernel builders ------------------------------------------------------

// Rows Binomial(theta, p) over theta in {0..d}, x in {0..d}.  Exact pmfs,
// zero tail mass.
Kernel make_binomial_kernel(int d, double p);

// Rows Poisson(theta) truncated at x_max with recorded tail mass.  When
// x_max < 0 the default truncation point ceil(max theta + 12 sqrt(max theta)
// + 30) is used, which keeps every tail below 1e-9.
Kernel make_poisson_kernel(const SupportGrid& theta_grid, int x_max = -1);

Kernel make_identity_kernel(const SupportGrid& grid);

// Poisson pmf helpers (stable log-space evaluation).
double poisson_pmf(double lambda, std::int64_t k);
double binomial_pmf(int n, double p, int k);

}  // namespace unseen

#endif
