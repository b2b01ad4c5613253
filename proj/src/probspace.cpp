#include "unseen/probspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace unseen {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

constexpr double kMassTol = 1e-12;
constexpr double kTailCap = 1e-9;

}  // namespace

SupportGrid::SupportGrid(std::vector<double> pts, GridKind k)
    : points(std::move(pts)), kind(k) {
  require(!points.empty(), "SupportGrid: empty grid");
  for (std::size_t i = 0; i < points.size(); ++i) {
    require(std::isfinite(points[i]) && points[i] >= 0.0,
            "SupportGrid: points must be finite and nonnegative");
    if (i > 0) require(points[i] > points[i - 1], "SupportGrid: not strictly increasing");
  }
}

bool SupportGrid::same_as(const SupportGrid& other) const {
  return kind == other.kind && points == other.points;
}

SupportGrid SupportGrid::integers(std::size_t count) {
  std::vector<double> pts(count);
  std::iota(pts.begin(), pts.end(), 0.0);
  return SupportGrid(std::move(pts), GridKind::integer);
}

SupportGrid SupportGrid::linspace(double lo, double hi, std::size_t count) {
  require(count >= 2 && hi > lo, "SupportGrid::linspace: bad range");
  std::vector<double> pts(count);
  for (std::size_t i = 0; i < count; ++i)
    pts[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return SupportGrid(std::move(pts), GridKind::real);
}

DiscreteDistribution::DiscreteDistribution(SupportGrid g, std::vector<double> w)
    : grid(std::move(g)), weights(std::move(w)) {
  require(grid.size() == weights.size(), "DiscreteDistribution: size mismatch");
  double total = 0.0;
  for (double wi : weights) {
    require(std::isfinite(wi) && wi >= -kMassTol, "DiscreteDistribution: negative weight");
    total += wi;
  }
  require(std::fabs(total - 1.0) <= 1e-12 * std::max(1.0, std::fabs(total)) + 1e-12,
          "DiscreteDistribution: weights do not sum to 1");
  for (double& wi : weights)
    if (wi < 0.0) wi = 0.0;
}

double DiscreteDistribution::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) m += grid[i] * weights[i];
  return m;
}

DiscreteDistribution DiscreteDistribution::point_mass(SupportGrid g, std::size_t index) {
  require(index < g.size(), "point_mass: index out of range");
  std::vector<double> w(g.size(), 0.0);
  w[index] = 1.0;
  return DiscreteDistribution(std::move(g), std::move(w));
}

DiscreteDistribution DiscreteDistribution::uniform(SupportGrid g) {
  std::vector<double> w(g.size(), 1.0 / static_cast<double>(g.size()));
  return DiscreteDistribution(std::move(g), std::move(w));
}

SignedMeasure::SignedMeasure(SupportGrid g, std::vector<double> w)
    : grid(std::move(g)), weights(std::move(w)) {
  require(grid.size() == weights.size(), "SignedMeasure: size mismatch");
  for (double wi : weights) require(std::isfinite(wi), "SignedMeasure: non-finite weight");
}

double SignedMeasure::l1_norm() const {
  double s = 0.0;
  for (double wi : weights) s += std::fabs(wi);
  return s;
}

double SignedMeasure::total() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

void Kernel::validate() const {
  require(rows.size() == n_theta() * n_x(), "Kernel: row storage size mismatch");
  require(tail_mass.size() == n_theta(), "Kernel: tail storage size mismatch");
  for (std::size_t t = 0; t < n_theta(); ++t) {
    double row_sum = 0.0;
    for (std::size_t x = 0; x < n_x(); ++x) {
      require(at(t, x) >= 0.0, "Kernel: negative entry");
      row_sum += at(t, x);
    }
    require(tail_mass[t] >= 0.0 && tail_mass[t] <= kTailCap, "Kernel: tail mass out of range");
    require(std::fabs(row_sum - (1.0 - tail_mass[t])) <= 1e-10,
            "Kernel: row does not sum to 1 - tail");
  }
}

std::vector<std::int64_t> Histogram::profile() const {
  std::int64_t max_count = 0;
  for (std::int64_t c : counts) {
    if (c < 0) throw std::invalid_argument("Histogram: negative count");
    max_count = std::max(max_count, c);
  }
  std::vector<std::int64_t> phi(static_cast<std::size_t>(max_count) + 1, 0);
  for (std::int64_t c : counts) ++phi[static_cast<std::size_t>(c)];
  return phi;
}

std::int64_t Histogram::total_observations() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t Histogram::distinct_observed() const {
  std::int64_t d = 0;
  for (std::int64_t c : counts)
    if (c > 0) ++d;
  return d;
}

// ---- divergences ----------------------------------------------------------

namespace {
void require_same_grid(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  if (!p.grid.same_as(q.grid))
    throw std::invalid_argument("divergence: distributions live on different grids");
}
}  // namespace

double tv_distance(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_grid(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::fabs(p.weights[i] - q.weights[i]);
  return 0.5 * s;
}

double hellinger_sq(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_grid(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double d = std::sqrt(p.weights[i]) - std::sqrt(q.weights[i]);
    s += d * d;
  }
  return std::min(s, 2.0);
}

double chi2_divergence(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  require_same_grid(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double pi = p.weights[i], qi = q.weights[i];
    if (qi <= 0.0) {
      if (pi > 0.0) return kInf;
      continue;
    }
    s += pi * pi / qi;
  }
  return std::max(0.0, s - 1.0);
}

double chi2_tensorize(double chi2, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("chi2_tensorize: n must be positive");
  if (chi2 < 0.0) throw std::invalid_argument("chi2_tensorize: negative chi2");
  if (std::isinf(chi2)) return kInf;
  return std::expm1(static_cast<double>(n) * std::log1p(chi2));
}

// ---- kernel actions -------------------------------------------------------

std::vector<double> mix_weights(const Kernel& kernel, const std::vector<double>& pi_weights) {
  if (pi_weights.size() != kernel.n_theta())
    throw std::invalid_argument("mix: weight vector does not match theta grid");
  std::vector<double> out(kernel.n_x(), 0.0);
  for (std::size_t t = 0; t < kernel.n_theta(); ++t) {
    double w = pi_weights[t];
    if (w == 0.0) continue;
    const double* row = &kernel.rows[t * kernel.n_x()];
    for (std::size_t x = 0; x < kernel.n_x(); ++x) out[x] += w * row[x];
  }
  return out;
}

DiscreteDistribution mix(const Kernel& kernel, const DiscreteDistribution& pi) {
  if (!pi.grid.same_as(kernel.theta_grid))
    throw std::invalid_argument("mix: prior grid does not match kernel theta grid");
  std::vector<double> out = mix_weights(kernel, pi.weights);
  double total = std::accumulate(out.begin(), out.end(), 0.0);
  // total = 1 - residual, residual below 1e-9; spread it proportionally
  if (total > 0.0)
    for (double& v : out) v /= total;
  return DiscreteDistribution(kernel.x_grid, std::move(out));
}

std::vector<double> push(const Kernel& kernel, const std::vector<double>& g) {
  if (g.size() != kernel.n_x())
    throw std::invalid_argument("push: function does not match x grid");
  std::vector<double> out(kernel.n_theta(), 0.0);
  for (std::size_t t = 0; t < kernel.n_theta(); ++t) {
    const double* row = &kernel.rows[t * kernel.n_x()];
    double s = 0.0;
    for (std::size_t x = 0; x < kernel.n_x(); ++x) s += row[x] * g[x];
    out[t] = s;
  }
  return out;
}

// ---- kernel builders ------------------------------------------------------

double binomial_pmf(int n, double p, int k) {
  if (k < 0 || k > n) return 0.0;
  if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
  if (p >= 1.0) return k == n ? 1.0 : 0.0;
  double log_pmf = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                   k * std::log(p) + (n - k) * std::log1p(-p);
  return std::exp(log_pmf);
}

double poisson_pmf(double lambda, std::int64_t k) {
  if (k < 0) return 0.0;
  if (lambda <= 0.0) return k == 0 ? 1.0 : 0.0;
  double log_pmf = -lambda + static_cast<double>(k) * std::log(lambda) -
                   std::lgamma(static_cast<double>(k) + 1.0);
  return std::exp(log_pmf);
}

Kernel make_binomial_kernel(int d, double p) {
  if (d < 0) throw std::invalid_argument("make_binomial_kernel: d must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("make_binomial_kernel: p outside [0,1]");
  Kernel k;
  k.theta_grid = SupportGrid::integers(static_cast<std::size_t>(d) + 1);
  k.x_grid = SupportGrid::integers(static_cast<std::size_t>(d) + 1);
  k.rows.assign(k.n_theta() * k.n_x(), 0.0);
  k.tail_mass.assign(k.n_theta(), 0.0);
  for (int t = 0; t <= d; ++t)
    for (int x = 0; x <= t; ++x) k.rows[static_cast<std::size_t>(t) * k.n_x() + x] = binomial_pmf(t, p, x);
  k.validate();
  return k;
}

Kernel make_poisson_kernel(const SupportGrid& theta_grid, int x_max) {
  double theta_max = theta_grid.points.back();
  if (x_max < 0)
    x_max = static_cast<int>(std::ceil(theta_max + 12.0 * std::sqrt(theta_max) + 30.0));
  Kernel k;
  k.theta_grid = theta_grid;
  k.x_grid = SupportGrid::integers(static_cast<std::size_t>(x_max) + 1);
  k.rows.assign(k.n_theta() * k.n_x(), 0.0);
  k.tail_mass.assign(k.n_theta(), 0.0);
  for (std::size_t t = 0; t < k.n_theta(); ++t) {
    double lambda = theta_grid[t];
    double row_sum = 0.0;
    // forward recurrence from pmf(0); restart from log-space if underflowed
    double pmf = std::exp(-lambda);
    for (int x = 0; x <= x_max; ++x) {
      if (x > 0) pmf *= lambda / x;
      if (pmf == 0.0 && lambda > 700.0) pmf = poisson_pmf(lambda, x);
      k.rows[t * k.n_x() + x] = pmf;
      row_sum += pmf;
    }
    double tail = std::max(0.0, 1.0 - row_sum);
    if (tail > kTailCap)
      throw std::invalid_argument("make_poisson_kernel: x_max too small, tail above 1e-9");
    k.tail_mass[t] = tail;
  }
  k.validate();
  return k;
}

Kernel make_identity_kernel(const SupportGrid& grid) {
  Kernel k;
  k.theta_grid = grid;
  k.x_grid = grid;
  k.rows.assign(grid.size() * grid.size(), 0.0);
  k.tail_mass.assign(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) k.rows[i * grid.size() + i] = 1.0;
  return k;
}

}  // namespace unseen
