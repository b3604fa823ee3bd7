#pragma once

#include <cstdint>
#include <random>

#include "mfbound/matrix.hpp"

namespace mfbound {

/// Seedable generator with a platform-independent output stream.
///
/// Wraps std::mt19937_64, whose sequence is fixed by the standard, and maps
/// raw 64-bit words to doubles by hand because the standard distributions
/// are implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi].
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Real and imaginary parts independent uniform on [-1, 1].
  Complex unit_box() {
    const double re = uniform(-1.0, 1.0);
    return {re, uniform(-1.0, 1.0)};
  }

private:
  std::mt19937_64 engine_;
};

/// d x d matrix with independent real/imaginary parts uniform on [-1, 1].
inline ComplexMatrix random_matrix(std::size_t d, Rng& rng) {
  ComplexMatrix m(d, d);
  for (auto& z : m.data()) z = rng.unit_box();
  return m;
}

}  // namespace mfbound
