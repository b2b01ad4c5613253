#include "unseen/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace unseen {

std::int64_t sample_binomial(Rng& rng, std::int64_t n, double p) {
  if (n < 0) throw std::invalid_argument("sample_binomial: negative n");
  if (p <= 0.0) return 0;
  if (p >= 1.0) return n;
  std::int64_t k = 0;
  for (std::int64_t i = 0; i < n; ++i)
    if (rng.next_double() < p) ++k;
  return k;
}

namespace {

std::int64_t knuth_poisson(Rng& rng, double lambda) {
  double limit = std::exp(-lambda);
  double prod = 1.0;
  std::int64_t k = -1;
  do {
    ++k;
    prod *= rng.next_double();
  } while (prod > limit);
  return k;
}

}  // namespace

std::int64_t sample_poisson(Rng& rng, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("sample_poisson: negative lambda");
  std::int64_t total = 0;
  while (lambda > 30.0) {
    // Poi(lambda) = Poi(30) + Poi(lambda - 30), independent chunks
    total += knuth_poisson(rng, 30.0);
    lambda -= 30.0;
  }
  return total + knuth_poisson(rng, lambda);
}

std::size_t sample_index(Rng& rng, const double* weights, std::size_t n, double total) {
  double u = rng.next_double() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return n - 1;
}

}  // namespace unseen
