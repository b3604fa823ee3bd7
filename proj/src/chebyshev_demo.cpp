#include "mfbound/chebyshev_demo.hpp"

#include <cmath>
#include <numbers>

#include "mfbound/bounds.hpp"
#include "mfbound/error.hpp"
#include "mfbound/interp.hpp"
#include "mfbound/norms.hpp"
#include "mfbound/random.hpp"

namespace mfbound {

namespace {

// Product of `count` Householder reflectors with seeded random directions.
ComplexMatrix random_unitary(std::size_t dim, std::size_t count, Rng& rng) {
  ComplexMatrix q = identity(dim);
  for (std::size_t r = 0; r < count; ++r) {
    std::vector<Complex> v(dim);
    double len2 = 0.0;
    for (auto& z : v) {
      z = rng.unit_box();
      len2 += std::norm(z);
    }
    // q <- q (1 - 2 v v^H / |v|^2)
    for (std::size_t i = 0; i < dim; ++i) {
      Complex dot{};
      for (std::size_t j = 0; j < dim; ++j) dot += q(i, j) * v[j];
      dot *= 2.0 / len2;
      for (std::size_t j = 0; j < dim; ++j) q(i, j) -= dot * std::conj(v[j]);
    }
  }
  return q;
}

double sharp_error(const NewtonPolynomial& p, double lo, double hi, std::size_t points) {
  double best = 0.0;
  for (std::size_t k = 0; k < points; ++k) {
    const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
    best = std::max(best, std::abs(std::exp(Complex(x)) - newton_eval_scalar(p, x)));
  }
  return best;
}

}  // namespace

ComplexMatrix hermitian_test_matrix(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw InvalidArgument("hermitian_test_matrix: dim must be positive");
  std::vector<Complex> lambda(dim);
  for (std::size_t k = 0; k < dim; ++k)
    lambda[k] = dim == 1 ? 0.0 : -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(dim - 1);
  Rng rng(seed);
  const ComplexMatrix q = random_unitary(dim, 3, rng);
  const ComplexMatrix a = mat_mul(scale_columns(q, lambda), q.adjoint());
  // Symmetrize so the result is Hermitian to the last bit.
  return scalar_mul(0.5, a + a.adjoint());
}

ChebyshevDemo chebyshev_demo(std::size_t n, std::size_t grid_points, std::size_t test_dim) {
  if (n == 0) throw InvalidArgument("chebyshev_demo: n must be positive");
  if (grid_points < 2) throw InvalidArgument("chebyshev_demo: need at least 2 grid points");
  ChebyshevDemo d;
  d.n = n;
  d.grid_points = grid_points;
  d.test_dim = test_dim;
  d.closed_form = std::numbers::e / (factorial(n) * std::ldexp(1.0, static_cast<int>(n) - 1));

  const NodeSet nodes = chebyshev_nodes(n);
  const auto p = divided_differences(AnalyticFunction::exponential(), nodes);
  d.sharp_0_1 = sharp_error(p, 0.0, 1.0, grid_points);
  d.sharp_m1_1 = sharp_error(p, -1.0, 1.0, grid_points);

  const ComplexMatrix a = hermitian_test_matrix(test_dim);
  d.cor5_value = exp_bound_cor5(a, nodes, MatrixNorm::spectral()).value;
  return d;
}

}  // namespace mfbound
