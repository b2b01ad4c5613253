#ifndef UNSEEN_RNG_HPP
#define UNSEEN_RNG_HPP

#include <cstdint>

// Self-contained counter-friendly PRNG plus the discrete samplers the
// simulators need.  std::*_distribution is implementation-defined, so all
// sampling here is hand-rolled to keep runs bit-reproducible.
//
// Seed derivation contract: a run owns a root seed; the generator for
// replication index i is Rng(derive_seed(root, i)).  Results are therefore
// identical no matter how replication indices are scheduled across threads.

namespace unseen {

// splitmix64; used both as a stream generator and as the seed mixer.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1) with 53 random bits
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }
};

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t counter) {
  Rng mixer(root ^ (0x5851f42d4c957f2dULL * (counter + 1)));
  return mixer.next_u64();
}

// Binomial(n, p) as n Bernoulli trials; exact and deterministic, O(n).
std::int64_t sample_binomial(Rng& rng, std::int64_t n, double p);

// Poisson(lambda) by Knuth inversion, splitting large lambda into chunks of
// at most 30 so the product never underflows; exact and deterministic.
std::int64_t sample_poisson(Rng& rng, double lambda);

// Index draw from an unnormalized weight vector (linear scan).
std::size_t sample_index(Rng& rng, const double* weights, std::size_t n, double total);

}  // namespace unseen

#endif
