#pragma once

#include <cstdint>
#include <random>

#include "jaccoord/rat.hpp"

namespace jaccoord {

/// Seeded generator with platform-independent draws. std::mt19937_64 is
/// fully specified; the standard distributions are not, so bounded draws
/// use a plain modulus.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long long uniform(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(engine_() % span);
  }

  /// num/den with |num| <= height and 1 <= den <= height.
  Rat rational(long long height) {
    const long long num = uniform(-height, height);
    const long long den = uniform(1, height);
    return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
  }

  Rat nonzero_rational(long long height) {
    for (;;) {
      Rat r = rational(height);
      if (sgn(r) != 0) return r;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace jaccoord
