#include "mfbound/interp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mfbound/error.hpp"
#include "mfbound/expm.hpp"

namespace mfbound {

namespace {

bool lex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Gauss-Legendre rule with 32 points on [0, 1].
struct GaussRule {
  std::array<double, 32> x{};
  std::array<double, 32> w{};
};

const GaussRule& gauss32() {
  static const GaussRule rule = [] {
    constexpr int n = 32;
    GaussRule r;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      r.x[i] = 0.5 * (1.0 - x);
      r.w[i] = 1.0 / ((1.0 - x * x) * dp * dp);  // 2/((1-x^2)P'^2) halved for [0,1]
    }
    return r;
  }();
  return rule;
}

Complex simplex_integral(const AnalyticFunction& f, std::size_t order, std::span<const Complex> steps,
                         std::size_t axis, double upper, Complex base) {
  if (axis == steps.size()) return f.derivative(order, base);
  const auto& rule = gauss32();
  Complex sum{};
  for (std::size_t q = 0; q < rule.x.size(); ++q) {
    const double t = upper * rule.x[q];
    sum += rule.w[q] * simplex_integral(f, order, steps, axis + 1, t, base + steps[axis] * t);
  }
  return upper * sum;
}

std::vector<Complex> polynomial_derivative(std::vector<Complex> c, std::size_t k) {
  for (std::size_t d = 0; d < k && !c.empty(); ++d) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = c[i] * static_cast<double>(i);
    c.pop_back();
  }
  return c;
}

Complex horner(std::span<const Complex> c, Complex z) {
  Complex r{};
  for (std::size_t i = c.size(); i-- > 0;) r = r * z + c[i];
  return r;
}

}  // namespace

// --- NodeSet ---------------------------------------------------------------

NodeSet::NodeSet(std::vector<Complex> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw InvalidArgument("NodeSet: at least one node is required");
  for (const auto& z : nodes_)
    if (!finite(z)) throw InvalidArgument("NodeSet: non-finite node");
}

std::size_t NodeSet::multiplicity(Complex z) const {
  return static_cast<std::size_t>(std::count(nodes_.begin(), nodes_.end(), z));
}

std::size_t NodeSet::max_multiplicity() const {
  std::size_t best = 0;
  for (const auto& z : nodes_) best = std::max(best, multiplicity(z));
  return best;
}

std::vector<Complex> NodeSet::distinct() const {
  std::vector<Complex> out;
  for (const auto& z : nodes_)
    if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
  return out;
}

double NodeSet::max_real() const {
  double b = nodes_.front().real();
  for (const auto& z : nodes_) b = std::max(b, z.real());
  return b;
}

double NodeSet::spread() const {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j = i + 1; j < nodes_.size(); ++j) s = std::max(s, std::abs(nodes_[i] - nodes_[j]));
  return s;
}

double NodeSet::min_distinct_gap() const {
  const auto d = distinct();
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) g = std::min(g, std::abs(d[i] - d[j]));
  return g;
}

// --- AnalyticFunction ------------------------------------------------------

Complex AnalyticFunction::derivative(std::size_t k, Complex z) const {
  if (k > max_order) {
    throw InvalidArgument("function '" + name + "' provides derivatives up to order " +
                          std::to_string(max_order) + ", order " + std::to_string(k) + " requested");
  }
  return k == 0 ? scalar_eval(z) : scalar_derivative(k, z);
}

ComplexMatrix AnalyticFunction::matrix_derivative(std::size_t k, const ComplexMatrix& a) const {
  if (k > max_order || !matrix_nth_derivative) {
    throw InvalidArgument("function '" + name + "' has no matrix evaluator for derivative order " +
                          std::to_string(k));
  }
  return matrix_nth_derivative(k, a);
}

AnalyticFunction AnalyticFunction::exponential() {
  AnalyticFunction f;
  f.name = "exp";
  f.kind = FunctionKind::exponential;
  f.scalar_eval = [](Complex z) { return std::exp(z); };
  f.scalar_derivative = [](std::size_t, Complex z) { return std::exp(z); };
  f.matrix_nth_derivative = [](std::size_t, const ComplexMatrix& a) { return matrix_exp(a); };
  f.max_order = std::numeric_limits<std::size_t>::max();
  return f;
}

AnalyticFunction AnalyticFunction::polynomial(std::vector<Complex> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  for (const auto& c : coeffs)
    if (!finite(c)) throw InvalidArgument("polynomial: non-finite coefficient");
  AnalyticFunction f;
  std::ostringstream name;
  name << "poly(degree " << coeffs.size() - 1 << ")";
  f.name = name.str();
  f.kind = FunctionKind::polynomial;
  f.scalar_eval = [coeffs](Complex z) { return horner(coeffs, z); };
  f.scalar_derivative = [coeffs](std::size_t k, Complex z) { return horner(polynomial_derivative(coeffs, k), z); };
  f.matrix_nth_derivative = [coeffs](std::size_t k, const ComplexMatrix& a) {
    const auto c = polynomial_derivative(coeffs, k);
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = c.size(); i-- > 0;) r = shift(mat_mul(r, a), c[i]);
    return r;
  };
  f.max_order = std::numeric_limits<std::size_t>::max();
  return f;
}

// --- divided differences ---------------------------------------------------

Complex divided_difference(const AnalyticFunction& f, std::span<const Complex> points, const Tolerances& tol) {
  if (points.empty()) throw InvalidArgument("divided_difference: no points");
  std::vector<Complex> s(points.begin(), points.end());
  std::stable_sort(s.begin(), s.end(), lex_less);
  const std::size_t n = s.size();

  std::vector<Complex> col(n);
  for (std::size_t i = 0; i < n; ++i) col[i] = f.derivative(0, s[i]);
  double inv_factorial = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    inv_factorial /= static_cast<double>(j);
    for (std::size_t i = n - 1; i >= j; --i) {
      if (s[i] == s[i - j]) {
        col[i] = f.derivative(j, s[i]) * inv_factorial;
      } else {
        col[i] = (col[i] - col[i - 1]) / (s[i] - s[i - j]);
      }
    }
  }
  const Complex r = col[n - 1];
  if (!finite(r) || std::abs(r) > tol.coeff_growth_limit) {
    throw ConditioningError("divided difference overflowed; nodes are too clustered");
  }
  return r;
}

NewtonPolynomial divided_differences(const AnalyticFunction& f, const NodeSet& nodes, const Tolerances& tol) {
  const std::size_t needed = nodes.max_multiplicity() - 1;
  if (needed > f.max_order) {
    throw InvalidArgument("function '" + f.name + "' lacks derivative order " + std::to_string(needed) +
                          " required by repeated nodes");
  }
  NewtonPolynomial p{nodes, {}, {}};
  p.coeffs.reserve(nodes.size());
  const auto z = nodes.values();
  for (std::size_t k = 0; k < z.size(); ++k) p.coeffs.push_back(divided_difference(f, z.first(k + 1), tol));

  const double spread = nodes.spread();
  const double gap = nodes.min_distinct_gap();
  if (std::isfinite(gap) && gap < tol.node_gap_warning * spread) {
    std::ostringstream msg;
    msg << "nearly coincident distinct nodes: min gap " << gap << " vs spread " << spread;
    p.warnings.push_back(msg.str());
  }
  return p;
}

Complex dd_integral_oracle(const AnalyticFunction& f, std::span<const Complex> points) {
  if (points.empty()) throw InvalidArgument("dd_integral_oracle: no points");
  if (points.size() > 5) throw InvalidArgument("dd_integral_oracle: at most 5 points supported");
  std::vector<Complex> steps;
  for (std::size_t k = 1; k < points.size(); ++k) steps.push_back(points[k] - points[k - 1]);
  return simplex_integral(f, steps.size(), steps, 0, 1.0, points[0]);
}

// --- evaluation ------------------------------------------------------------

Complex newton_eval_scalar(const NewtonPolynomial& p, Complex z) {
  const std::size_t m = p.coeffs.size();
  Complex r = p.coeffs[m - 1];
  for (std::size_t k = m - 1; k-- > 0;) r = p.coeffs[k] + (z - p.nodes[k]) * r;
  return r;
}

std::vector<Complex> newton_eval_derivatives(const NewtonPolynomial& p, Complex z, std::size_t order) {
  const std::size_t m = p.coeffs.size();
  std::vector<Complex> d(order + 1);
  d[0] = p.coeffs[m - 1];
  for (std::size_t k = m - 1; k-- > 0;) {
    const Complex u = z - p.nodes[k];
    for (std::size_t j = order; j >= 1; --j) d[j] = u * d[j] + static_cast<double>(j) * d[j - 1];
    d[0] = p.coeffs[k] + u * d[0];
  }
  return d;
}

ComplexMatrix newton_eval_matrix(const NewtonPolynomial& p, const ComplexMatrix& a) {
  require_square(a, "newton_eval_matrix");
  const std::size_t m = p.coeffs.size();
  ComplexMatrix r = scalar_mul(p.coeffs[m - 1], identity(a.rows()));
  for (std::size_t k = m - 1; k-- > 0;) {
    // c_k 1 + (A - z_k 1) R
    ComplexMatrix next = mat_mul(a, r);
    auto nd = next.data();
    auto rd = r.data();
    const Complex zk = p.nodes[k];
    for (std::size_t e = 0; e < nd.size(); ++e) nd[e] -= zk * rd[e];
    r = shift(next, p.coeffs[k]);
  }
  return r;
}

Complex omega_at_scalar(const NodeSet& nodes, Complex z) {
  Complex r{1.0};
  for (const auto& zk : nodes) r *= z - zk;
  return r;
}

ComplexMatrix omega_at_matrix(const NodeSet& nodes, const ComplexMatrix& a) {
  require_square(a, "omega_at_matrix");
  ComplexMatrix r = shift(a, -nodes[0]);
  for (std::size_t k = 1; k < nodes.size(); ++k) r = mat_mul(r, shift(a, -nodes[k]));
  return r;
}

// --- node generators -------------------------------------------------------

NodeSet chebyshev_nodes(std::size_t m, double a, double b) {
  if (m == 0) throw InvalidArgument("chebyshev_nodes: m must be positive");
  if (!(a < b)) throw InvalidArgument("chebyshev_nodes: degenerate interval");
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::vector<Complex> z(m);
  const double dm = static_cast<double>(m);
  for (std::size_t k = 1; k <= m; ++k) {
    // cos((2k-1)pi/(2m)) written as a sine so the set is exactly symmetric.
    const double x = std::sin(std::numbers::pi * (dm + 1.0 - 2.0 * static_cast<double>(k)) / (2.0 * dm));
    z[m - k] = mid + half * x;
  }
  return NodeSet(std::move(z));
}

NodeSet taylor_nodes(Complex z1, std::size_t m) {
  if (m == 0) throw InvalidArgument("taylor_nodes: m must be positive");
  return NodeSet(std::vector<Complex>(m, z1));
}

double factorial(std::size_t m) {
  if (m <= 20) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= m; ++k) f *= k;
    return static_cast<double>(f);
  }
  return std::tgamma(static_cast<double>(m) + 1.0);
}

}  // namespace mfbound
