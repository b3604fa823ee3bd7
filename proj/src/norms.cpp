#include "mfbound/norms.hpp"

#include <algorithm>
#include <cmath>

#include "mfbound/error.hpp"

namespace mfbound {

namespace {

constexpr std::uint64_t kNormSeed = 0x5eed'2a2a'0001ULL;

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

void normalize(std::vector<Complex>& v, double len) {
  for (auto& z : v) z /= len;
}

std::vector<Complex> random_unit(std::size_t n, Rng& rng) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = rng.unit_box();
  const double len = norm2(v);
  normalize(v, len > 0.0 ? len : 1.0);
  return v;
}

}  // namespace

double spectral_norm(const ComplexMatrix& a, Rng& rng, const Tolerances& tol) {
  if (a.empty()) return 0.0;
  if (!a.all_finite()) throw Overflow("spectral_norm: non-finite input");
  const double fro = frobenius_norm(a);
  if (fro == 0.0) return 0.0;
  if (a.rows() == 1 || a.cols() == 1) return fro;

  // Work with a scaled copy so squares cannot overflow.
  const ComplexMatrix s = scalar_mul(1.0 / fro, a);

  double best = 0.0;
  for (std::size_t attempt = 0; attempt <= tol.norm_restarts; ++attempt) {
    auto v = random_unit(s.cols(), rng);
    double prev = -1.0;
    double prev_delta = -1.0;
    for (std::size_t it = 0; it < tol.norm_max_iters; ++it) {
      const auto w = mat_vec(s, v);
      const double lambda = std::norm(norm2(w));  // v^H S^H S v with |v| = 1
      best = std::max(best, lambda);
      auto u = adjoint_vec(s, w);
      const double ulen = norm2(u);
      if (ulen == 0.0) break;  // start vector in the null space; restart
      normalize(u, ulen);
      v = std::move(u);

      if (prev >= 0.0) {
        const double delta = std::abs(lambda - prev);
        // Geometric extrapolation of the remaining error from successive
        // increments; roundoff-level increments count as converged.
        double remaining = delta;
        if (prev_delta > 0.0) {
          const double rate = delta / prev_delta;
          if (rate < 1.0) remaining = delta * rate / (1.0 - rate);
        }
        if (delta <= 1e-3 * tol.norm_rel * lambda ||
            (delta <= tol.norm_rel * lambda && remaining <= tol.norm_rel * lambda)) {
          return fro * std::sqrt(std::max(lambda, best));
        }
        prev_delta = delta;
      }
      prev = lambda;
    }
  }
  throw NonConvergence("spectral_norm: power iteration did not converge", fro * std::sqrt(best));
}

double spectral_norm(const ComplexMatrix& a, const Tolerances& tol) {
  Rng rng(kNormSeed);
  return spectral_norm(a, rng, tol);
}

double frobenius_norm(const ComplexMatrix& a) {
  // Scaled accumulation keeps large entries from overflowing the sum.
  double scale = 0.0;
  for (const auto& z : a.data()) scale = std::max(scale, std::abs(z));
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z / scale);
  return scale * std::sqrt(s);
}

double one_norm(const ComplexMatrix& a) {
  std::vector<double> col(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) col[j] += std::abs(r[j]);
  }
  return col.empty() ? 0.0 : *std::max_element(col.begin(), col.end());
}

MatrixNorm MatrixNorm::spectral(const Tolerances& tol) {
  return MatrixNorm(NormKind::spectral, "spectral",
                    [tol](const ComplexMatrix& a) { return spectral_norm(a, tol); });
}

MatrixNorm MatrixNorm::frobenius() {
  return MatrixNorm(NormKind::frobenius, "frobenius", [](const ComplexMatrix& a) { return frobenius_norm(a); });
}

MatrixNorm MatrixNorm::one() {
  return MatrixNorm(NormKind::one, "one", [](const ComplexMatrix& a) { return one_norm(a); });
}

MatrixNorm MatrixNorm::custom(std::string name, std::function<double(const ComplexMatrix&)> fn) {
  if (!fn) throw InvalidArgument("MatrixNorm::custom: empty functional");
  return MatrixNorm(NormKind::custom, std::move(name), std::move(fn));
}

MatrixNorm MatrixNorm::by_name(const std::string& name) {
  if (name == "spectral" || name == "2") return spectral();
  if (name == "frobenius" || name == "fro") return frobenius();
  if (name == "one" || name == "1") return one();
  throw InvalidArgument("unknown norm '" + name + "' (expected spectral, frobenius, or one)");
}

}  // namespace mfbound
