#include "mfbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mfbound/decomp.hpp"
#include "mfbound/error.hpp"
#include "mfbound/expm.hpp"
#include "mfbound/hull.hpp"
#include "mfbound/parallel.hpp"

namespace mfbound {

namespace {

bool lex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::vector<Complex> sorted_unique(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_spectral(const MatrixNorm& norm, const char* method) {
  if (norm.kind() != NormKind::spectral) {
    throw InvalidArgument(std::string(method) + " holds for the spectral norm only, got '" + norm.name() + "'");
  }
}

void require_finite_value(double v, const char* method) {
  if (!std::isfinite(v)) throw Overflow(std::string(method) + ": certificate value overflowed");
}

void attach_refinement_warning(BoundReport& r, double tol) {
  if (!r.coarse_value) return;
  const double moved = r.value - *r.coarse_value;
  if (moved > tol * r.value) {
    std::ostringstream msg;
    msg << "grid refinement moved the bound by " << 100.0 * moved / r.value << "% (threshold "
        << 100.0 * tol << "%)";
    r.warnings.push_back(msg.str());
  }
}

// sum_{j<terms} x^j / j!
double truncated_exp_series(double x, std::size_t terms) {
  double sum = 0.0;
  double term = 1.0;
  for (std::size_t j = 0; j < terms; ++j) {
    sum += term;
    term *= x / static_cast<double>(j + 1);
  }
  return sum;
}

// e^gamma ||Omega(A)|| / m! * series, shared by the closed-form corollaries.
BoundReport closed_form(BoundMethod method, const ComplexMatrix& a, const NodeSet& nodes, const MatrixNorm& norm,
                        const Tolerances& tol, double series) {
  const auto ab = spectral_abscissae(a, nodes, tol);
  const double omega_norm = norm(omega_at_matrix(nodes, a));
  BoundReport r;
  r.method = method;
  r.value = std::exp(ab.gamma) * omega_norm / factorial(nodes.size()) * series;
  r.norm_name = norm.name();
  require_finite_value(r.value, to_string(method).c_str());
  return r;
}

}  // namespace

std::string to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::theorem1: return "theorem1";
    case BoundMethod::cor3: return "cor3";
    case BoundMethod::cor4: return "cor4";
    case BoundMethod::cor5: return "cor5";
    case BoundMethod::cor6: return "cor6";
    case BoundMethod::taylor: return "taylor";
  }
  return "unknown";
}

BoundMethod bound_method_from_string(const std::string& name) {
  for (auto m : {BoundMethod::theorem1, BoundMethod::cor3, BoundMethod::cor4, BoundMethod::cor5,
                 BoundMethod::cor6, BoundMethod::taylor}) {
    if (to_string(m) == name) return m;
  }
  throw InvalidArgument("unknown bound method '" + name + "'");
}

SpectralAbscissae spectral_abscissae(const ComplexMatrix& a, const NodeSet& nodes, const Tolerances& tol) {
  const auto ev = eigenvalues(a, tol);
  SpectralAbscissae s;
  s.alpha = ev.front().real();
  for (const auto& z : ev) s.alpha = std::max(s.alpha, z.real());
  s.beta = nodes.max_real();
  s.gamma = std::max(s.alpha, s.beta);
  return s;
}

std::vector<double> t_grid(std::size_t n) {
  if (n < 2) throw InvalidArgument("t grid needs at least 2 points");
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = static_cast<double>(k) / static_cast<double>(n - 1);
  return t;
}

double theorem_integrand(const ComplexMatrix& omega, const ComplexMatrix& a, const AnalyticFunction& f,
                         std::size_t m, double t, Complex mu, const MatrixNorm& norm) {
  const ComplexMatrix arg = affine(a, t, (1.0 - t) * mu);
  return norm(mat_mul(omega, f.matrix_derivative(m, arg)));
}

BoundReport theorem_bound(const ComplexMatrix& a, const NodeSet& nodes, const AnalyticFunction& f,
                          const MatrixNorm& norm, const BoundOptions& opts) {
  require_square(a, "theorem_bound");
  const std::size_t m = nodes.size();
  if (m > f.max_order || !f.matrix_nth_derivative) {
    throw InvalidArgument("theorem_bound: function '" + f.name + "' has no matrix derivative of order " +
                          std::to_string(m));
  }
  if (opts.t_count < 2) throw InvalidArgument("theorem_bound: t_count must be at least 2");
  if (opts.per_edge < 1) throw InvalidArgument("theorem_bound: per_edge must be at least 1");

  const ComplexMatrix omega = omega_at_matrix(nodes, a);
  const HullPolygon hull = convex_hull(nodes.values(), opts.tol);

  const std::size_t t_count = opts.refine ? 2 * opts.t_count - 1 : opts.t_count;
  const std::size_t per_edge = opts.refine ? 2 * opts.per_edge : opts.per_edge;
  const auto ts = t_grid(t_count);
  const auto mus = sorted_unique(boundary_samples(hull, per_edge));
  const auto coarse_mus = sorted_unique(boundary_samples(hull, opts.per_edge));

  const std::size_t cells = ts.size() * mus.size();
  const auto values = parallel_map<double>(cells, opts.threads, [&](std::size_t i) {
    return theorem_integrand(omega, a, f, m, ts[i / mus.size()], mus[i % mus.size()], norm);
  });

  BoundReport r;
  r.method = BoundMethod::theorem1;
  r.norm_name = norm.name();
  r.t_count = t_count;
  r.per_edge = per_edge;
  std::size_t best = 0;
  double coarse = -1.0;
  for (std::size_t i = 0; i < cells; ++i) {
    if (values[i] > values[best]) best = i;
    if (opts.refine) {
      const bool coarse_t = (i / mus.size()) % 2 == 0;
      const Complex mu = mus[i % mus.size()];
      if (coarse_t && std::binary_search(coarse_mus.begin(), coarse_mus.end(), mu, lex_less))
        coarse = std::max(coarse, values[i]);
    }
  }
  const double inv_fact = 1.0 / factorial(m);
  r.value = values[best] * inv_fact;
  r.argmax_t = ts[best / mus.size()];
  r.argmax_mu = mus[best % mus.size()];
  if (opts.refine) r.coarse_value = coarse * inv_fact;
  require_finite_value(r.value, "theorem_bound");
  attach_refinement_warning(r, opts.tol.refinement_rel);
  return r;
}

double cor3_integrand(const ComplexMatrix& omega, const ComplexMatrix& exp_ta, double beta, double t,
                      const MatrixNorm& norm) {
  return std::exp((1.0 - t) * beta) * norm(mat_mul(omega, exp_ta));
}

BoundReport exp_bound_cor3(const ComplexMatrix& a, const NodeSet& nodes, const MatrixNorm& norm,
                           const BoundOptions& opts) {
  require_square(a, "exp_bound_cor3");
  if (opts.t_count < 2) throw InvalidArgument("exp_bound_cor3: t_count must be at least 2");
  const ComplexMatrix omega = omega_at_matrix(nodes, a);
  const double beta = opts.beta_override.value_or(nodes.max_real());
  const std::size_t t_count = opts.refine ? 2 * opts.t_count - 1 : opts.t_count;
  const auto ts = t_grid(t_count);

  const auto values = parallel_map<double>(ts.size(), opts.threads, [&](std::size_t k) {
    const ComplexMatrix e = opts.exp_ta ? opts.exp_ta(ts[k]) : matrix_exp(scalar_mul(ts[k], a));
    return cor3_integrand(omega, e, beta, ts[k], norm);
  });

  BoundReport r;
  r.method = BoundMethod::cor3;
  r.norm_name = norm.name();
  r.t_count = t_count;
  std::size_t best = 0;
  double coarse = -1.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] > values[best]) best = k;
    if (k % 2 == 0) coarse = std::max(coarse, values[k]);
  }
  const double inv_fact = 1.0 / factorial(nodes.size());
  r.value = values[best] * inv_fact;
  r.argmax_t = ts[best];
  if (opts.refine) r.coarse_value = coarse * inv_fact;
  require_finite_value(r.value, "exp_bound_cor3");
  attach_refinement_warning(r, opts.tol.refinement_rel);
  return r;
}

BoundReport exp_bound_cor4(const ComplexMatrix& a, const NodeSet& nodes, const MatrixNorm& norm,
                           const Tolerances& tol) {
  require_square(a, "exp_bound_cor4");
  require_spectral(norm, "cor4");
  const double series = truncated_exp_series(2.0 * norm(a), a.rows());
  return closed_form(BoundMethod::cor4, a, nodes, norm, tol, series);
}

BoundReport exp_bound_cor5(const ComplexMatrix& a, const NodeSet& nodes, const MatrixNorm& norm,
                           const Tolerances& tol) {
  require_square(a, "exp_bound_cor5");
  require_spectral(norm, "cor5");
  if (!is_normal(a, tol)) throw InvalidArgument("cor5 requires a normal matrix");
  return closed_form(BoundMethod::cor5, a, nodes, norm, tol, 1.0);
}

BoundReport exp_bound_cor6(const ComplexMatrix& a, const NodeSet& nodes, const MatrixNorm& norm,
                           const Tolerances& tol) {
  require_square(a, "exp_bound_cor6");
  require_spectral(norm, "cor6");
  const SchurSplit split = split_schur(schur(a, tol));
  const double series = truncated_exp_series(norm(split.nilpotent), a.rows());
  return closed_form(BoundMethod::cor6, a, nodes, norm, tol, series);
}

BoundReport taylor_bound(const ComplexMatrix& a, Complex z1, std::size_t m, const AnalyticFunction& f,
                         const MatrixNorm& norm, const BoundOptions& opts) {
  BoundReport r = theorem_bound(a, taylor_nodes(z1, m), f, norm, opts);
  r.method = BoundMethod::taylor;
  return r;
}

double true_error(const ComplexMatrix& a, const NodeSet& nodes, const AnalyticFunction& f,
                  const ComplexMatrix& reference, const MatrixNorm& norm) {
  require_square(a, "true_error");
  if (reference.rows() != a.rows() || reference.cols() != a.cols())
    throw DimensionMismatch("true_error: reference has a different shape than A");
  const auto p = divided_differences(f, nodes);
  return norm(reference - newton_eval_matrix(p, a));
}

}  // namespace mfbound
