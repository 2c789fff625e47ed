#ifndef PFFC_RNG_HPP_
#define PFFC_RNG_HPP_

#include <cstdint>
#include <random>

namespace pffc {

// Seeded random stream. All distributions are derived from the mt19937_64
// output by hand (no std::*_distribution) so that a given seed produces the
// same sequence on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform on [0, 1), 53-bit resolution
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n), n >= 1 (rejection sampling, unbiased)
  std::uint64_t uniform_index(std::uint64_t n);

  // standard normal via Box-Muller
  double normal();

  // Laplace(0, scale) via inverse CDF
  double laplace(double scale);

 private:
  std::mt19937_64 gen_;
};

}  // namespace pffc

#endif  // PFFC_RNG_HPP_
