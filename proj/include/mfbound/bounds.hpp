#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mfbound/config.hpp"
#include "mfbound/interp.hpp"
#include "mfbound/matrix.hpp"
#include "mfbound/norms.hpp"

namespace mfbound {

enum class BoundMethod { theorem1, cor3, cor4, cor5, cor6, taylor };

std::string to_string(BoundMethod m);
/// Inverse of to_string; throws InvalidArgument on unknown names.
BoundMethod bound_method_from_string(const std::string& name);

/// alpha = max Re over the spectrum, beta = max Re over the nodes,
/// gamma = max(alpha, beta).
struct SpectralAbscissae {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

SpectralAbscissae spectral_abscissae(const ComplexMatrix& a, const NodeSet& nodes,
                                     const Tolerances& tol = default_tolerances());

/// Grid and execution parameters for the grid-maximized certificates.
struct BoundOptions {
  std::size_t t_count = 101;  // uniform t grid on [0, 1], endpoints included
  std::size_t per_edge = 64;  // hull boundary sampling density
  /// Evaluate on the doubled grid (2 t_count - 1, 2 per_edge), which
  /// contains the base grid, and warn when the maximum moves by more than
  /// tol.refinement_rel.
  bool refine = true;
  unsigned threads = 1;  // 0 = one per hardware thread
  Tolerances tol{};
  /// Replaces the computed beta in the exponential certificates.
  std::optional<double> beta_override;
  /// Optional evaluator of e^{tA}; matrix_exp(t A) otherwise.
  std::function<ComplexMatrix(double)> exp_ta;
};

/// One certificate value with where it was attained and how.
struct BoundReport {
  BoundMethod method = BoundMethod::theorem1;
  double value = 0.0;
  std::optional<double> argmax_t;
  std::optional<Complex> argmax_mu;
  std::size_t t_count = 0;
  std::size_t per_edge = 0;
  std::optional<double> coarse_value;  // maximum over the base grid when refined
  std::string norm_name;
  std::vector<std::string> warnings;
};

/// Uniform grid {0, 1/(n-1), ..., 1}; requires n >= 2.
std::vector<double> t_grid(std::size_t n);

/// ||Omega(A) f^(m)((1 - t) mu 1 + t A)||, the quantity maximized by
/// theorem_bound (before the 1/m! factor).
double theorem_integrand(const ComplexMatrix& omega, const ComplexMatrix& a, const AnalyticFunction& f,
                         std::size_t m, double t, Complex mu, const MatrixNorm& norm);

/// General certificate for ||f(A) - p(A)||:
/// (1/m!) max over t in [0,1] and mu on the boundary of the node hull of
/// theorem_integrand. Ties resolve to the smallest (t, re mu, im mu).
BoundReport theorem_bound(const ComplexMatrix& a, const NodeSet& nodes, const AnalyticFunction& f,
                          const MatrixNorm& norm, const BoundOptions& opts = {});

/// e^{(1-t) beta} ||Omega(A) e^{tA}||
double cor3_integrand(const ComplexMatrix& omega, const ComplexMatrix& exp_ta, double beta, double t,
                      const MatrixNorm& norm);

/// Exponential certificate maximized over t only.
BoundReport exp_bound_cor3(const ComplexMatrix& a, const NodeSet& nodes, const MatrixNorm& norm,
                           const BoundOptions& opts = {});

/// e^gamma ||Omega(A)|| / m! * sum_{j<d} (2||A||)^j / j!; spectral norm only.
BoundReport exp_bound_cor4(const ComplexMatrix& a, const NodeSet& nodes, const MatrixNorm& norm,
                           const Tolerances& tol = default_tolerances());

/// e^gamma ||Omega(A)|| / m! for normal A; spectral norm only.
BoundReport exp_bound_cor5(const ComplexMatrix& a, const NodeSet& nodes, const MatrixNorm& norm,
                           const Tolerances& tol = default_tolerances());

/// e^gamma ||Omega(A)|| / m! * sum_{j<d} ||N||^j / j! with N the strictly
/// triangular part of the Schur factor; spectral norm only.
BoundReport exp_bound_cor6(const ComplexMatrix& a, const NodeSet& nodes, const MatrixNorm& norm,
                           const Tolerances& tol = default_tolerances());

/// theorem_bound on m copies of z1 (truncated Taylor series about z1).
BoundReport taylor_bound(const ComplexMatrix& a, Complex z1, std::size_t m, const AnalyticFunction& f,
                         const MatrixNorm& norm, const BoundOptions& opts = {});

/// norm(reference - p(A)) with p the interpolation polynomial of f.
double true_error(const ComplexMatrix& a, const NodeSet& nodes, const AnalyticFunction& f,
                  const ComplexMatrix& reference, const MatrixNorm& norm);

}  // namespace mfbound
