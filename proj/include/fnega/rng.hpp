#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fnega {

// Deterministic RNG used by every ensemble builder (v1).
//
// Bit stream is mt19937_64 (fully specified by the standard, so identical on
// every platform). Floating-point mappings are written out explicitly instead
// of going through std::uniform_real_distribution / std::normal_distribution,
// whose output is implementation-defined. Normals are Box-Muller.
class Rng {
 public:
  static constexpr int version = 1;

  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53-bit mantissa.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double stddev) { return stddev * normal(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace fnega
