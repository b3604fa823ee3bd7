#pragma once

#include <cstddef>
#include <cstdint>

#include "mfbound/matrix.hpp"

namespace mfbound {

/// Certificate versus sharp error for e^z interpolated at Chebyshev nodes
/// on [-1, 1].
struct ChebyshevDemo {
  std::size_t n = 0;
  double closed_form = 0.0;   // e / (n! 2^(n-1))
  double cor5_value = 0.0;    // normal-matrix certificate for `test_dim` Hermitian A
  double sharp_0_1 = 0.0;     // max |e^x - p(x)| on a grid over [0, 1]
  double sharp_m1_1 = 0.0;    // same over [-1, 1]
  std::size_t grid_points = 0;
  std::size_t test_dim = 0;
};

/// Hermitian matrix with eigenvalues equally spaced on [-1, 1], endpoints
/// included, rotated by a seeded unitary.
ComplexMatrix hermitian_test_matrix(std::size_t dim, std::uint64_t seed = 7);

ChebyshevDemo chebyshev_demo(std::size_t n, std::size_t grid_points = 10000, std::size_t test_dim = 32);

}  // namespace mfbound
