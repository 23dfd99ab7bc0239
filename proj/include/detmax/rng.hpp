#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace detmax {

// Seeded mt19937_64 with hand-rolled draws so that generated streams are
// identical across standard-library implementations (std::uniform_*
// distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
  }

  // Box-Muller; avoids the non-portable std::normal_distribution.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    while (u <= 0.0) u = u01();
    const double v = u01();
    const double mag = std::sqrt(-2.0 * std::log(u));
    spare_ = mag * std::sin(2.0 * M_PI * v);
    have_spare_ = true;
    return mag * std::cos(2.0 * M_PI * v);
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace detmax
