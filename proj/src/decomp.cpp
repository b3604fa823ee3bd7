#include "mfbound/decomp.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mfbound/error.hpp"
#include "mfbound/norms.hpp"

namespace mfbound {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Plane rotation G = [[c, s], [-conj(s), c]] with G [x; y] = [r; 0].
struct Givens {
  double c;
  Complex s;
};

Givens make_givens(Complex x, Complex y) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ay == 0.0) return {1.0, 0.0};
  if (ax == 0.0) return {0.0, std::conj(y) / ay};
  const double rho = std::hypot(ax, ay);
  return {ax / rho, (x / ax) * std::conj(y) / rho};
}

// Rows k, k+1 <- G * rows, columns [from, n).
void rotate_rows(ComplexMatrix& m, std::size_t k, const Givens& g, std::size_t from) {
  for (std::size_t j = from; j < m.cols(); ++j) {
    const Complex a = m(k, j);
    const Complex b = m(k + 1, j);
    m(k, j) = g.c * a + g.s * b;
    m(k + 1, j) = -std::conj(g.s) * a + g.c * b;
  }
}

// Columns k, k+1 <- columns * G^H, rows [0, to).
void rotate_cols(ComplexMatrix& m, std::size_t k, const Givens& g, std::size_t to) {
  for (std::size_t i = 0; i < to; ++i) {
    const Complex a = m(i, k);
    const Complex b = m(i, k + 1);
    m(i, k) = a * g.c + b * std::conj(g.s);
    m(i, k + 1) = -a * g.s + b * g.c;
  }
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.data()) m = std::max(m, std::abs(z));
  return m;
}

// Eigenvalue of the trailing 2x2 block [[a, b], [c, d]] closest to d.
Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  const Complex half = 0.5 * (a - d);
  const Complex disc = std::sqrt(half * half + b * c);
  const Complex mid = 0.5 * (a + d);
  const Complex r1 = mid + disc;
  const Complex r2 = mid - disc;
  return std::abs(r1 - d) <= std::abs(r2 - d) ? r1 : r2;
}

}  // namespace

HessenbergForm hessenberg(const ComplexMatrix& a) {
  require_square(a, "hessenberg");
  const std::size_t n = a.rows();
  ComplexMatrix h = a;
  ComplexMatrix u = identity(n);  // A = U H U^H

  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    bool already_reduced = true;
    for (std::size_t i = k + 2; i < n; ++i)
      if (h(i, k) != Complex{}) already_reduced = false;
    if (already_reduced) continue;

    // v = x + e^{i arg x0} |x| e1, P = 1 - 2 v v^H / (v^H v)
    const Complex x0 = h(k + 1, k);
    const Complex phase = std::abs(x0) == 0.0 ? Complex{1.0} : x0 / std::abs(x0);
    std::fill(v.begin(), v.end(), Complex{});
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] += phase * xnorm;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    const double beta = 2.0 / vnorm2;

    // H <- P H
    for (std::size_t j = 0; j < n; ++j) {
      Complex dot{};
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
      dot *= beta;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= v[i] * dot;
    }
    // H <- H P and U <- U P
    for (ComplexMatrix* m : {&h, &u}) {
      for (std::size_t i = 0; i < n; ++i) {
        Complex dot{};
        for (std::size_t j = k + 1; j < n; ++j) dot += (*m)(i, j) * v[j];
        dot *= beta;
        for (std::size_t j = k + 1; j < n; ++j) (*m)(i, j) -= dot * std::conj(v[j]);
      }
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
  require_finite(h, "hessenberg");
  return {u.adjoint(), std::move(h)};
}

SchurForm schur(const ComplexMatrix& a, const Tolerances& tol) {
  require_square(a, "schur");
  const std::size_t n = a.rows();
  auto [q0, t] = hessenberg(a);
  ComplexMatrix z = q0.adjoint();  // A = Z T Z^H throughout

  const double scale = max_abs(t);
  const std::size_t cap = tol.schur_sweeps_per_dim * n;
  std::size_t sweeps = 0;
  std::size_t since_deflation = 0;
  std::size_t hi = n - 1;

  while (hi > 0) {
    std::size_t lo = hi;
    while (lo > 0) {
      double ref = std::abs(t(lo - 1, lo - 1)) + std::abs(t(lo, lo));
      if (ref == 0.0) ref = scale;
      if (std::abs(t(lo, lo - 1)) <= kEps * ref) {
        t(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      since_deflation = 0;
      continue;
    }
    if (++sweeps > cap) {
      throw NonConvergence("schur: QR iteration exceeded " + std::to_string(cap) + " sweeps",
                           std::abs(t(hi, hi - 1)));
    }
    ++since_deflation;

    Complex mu;
    if (since_deflation % 10 == 0) {
      // Exceptional shift to break cycles.
      mu = t(hi, hi) + 0.75 * std::abs(t(hi, hi - 1));
    } else {
      mu = wilkinson_shift(t(hi - 1, hi - 1), t(hi - 1, hi), t(hi, hi - 1), t(hi, hi));
    }

    for (std::size_t k = lo; k <= hi; ++k) t(k, k) -= mu;
    std::vector<Givens> rot;
    rot.reserve(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens g = make_givens(t(k, k), t(k + 1, k));
      rotate_rows(t, k, g, k);
      t(k + 1, k) = 0.0;
      rot.push_back(g);
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens& g = rot[k - lo];
      rotate_cols(t, k, g, std::min(k + 2, hi + 1));
      rotate_cols(z, k, g, n);
    }
    for (std::size_t k = lo; k <= hi; ++k) t(k, k) += mu;
  }

  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) t(i, j) = 0.0;
  require_finite(t, "schur");
  return {z.adjoint(), std::move(t), n, sweeps};
}

std::vector<Complex> eigenvalues(const ComplexMatrix& a, const Tolerances& tol) {
  return schur(a, tol).t.diag();
}

SchurSplit split_schur(const SchurForm& s) {
  const std::size_t n = s.t.rows();
  ComplexMatrix d(n, n);
  ComplexMatrix nil = s.t;
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = s.t(i, i);
    nil(i, i) = 0.0;
  }
  return {std::move(d), std::move(nil)};
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "solve");
  if (b.rows() != a.rows()) throw DimensionMismatch("solve: right-hand side has wrong row count");
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  ComplexMatrix lu = a;
  ComplexMatrix x = b;
  const double threshold = static_cast<double>(n) * kEps * max_abs(a);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0 || best <= threshold) {
      throw SingularMatrix("solve: matrix is singular to working precision (pivot " +
                           std::to_string(k) + ")");
    }
    if (piv != k) {
      std::swap_ranges(lu.row(k).begin(), lu.row(k).end(), lu.row(piv).begin());
      std::swap_ranges(x.row(k).begin(), x.row(k).end(), x.row(piv).begin());
    }
    const Complex inv_pivot = 1.0 / lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex l = lu(i, k) * inv_pivot;
      lu(i, k) = l;
      if (l == Complex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= l * lu(k, j);
      for (std::size_t j = 0; j < m; ++j) x(i, j) -= l * x(k, j);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    const Complex inv_pivot = 1.0 / lu(kk, kk);
    for (std::size_t j = 0; j < m; ++j) {
      Complex s = x(kk, j);
      for (std::size_t i = kk + 1; i < n; ++i) s -= lu(kk, i) * x(i, j);
      x(kk, j) = s * inv_pivot;
    }
  }
  require_finite(x, "solve");
  return x;
}

ComplexMatrix inverse(const ComplexMatrix& a) { return solve(a, identity(a.rows())); }

double condition_number_2(const ComplexMatrix& a, const Tolerances& tol) {
  return spectral_norm(a, tol) * spectral_norm(inverse(a), tol);
}

bool is_normal(const ComplexMatrix& a, const Tolerances& tol) {
  require_square(a, "is_normal");
  const ComplexMatrix ah = a.adjoint();
  const double commutator = spectral_norm(mat_mul(a, ah) - mat_mul(ah, a), tol);
  const double na = spectral_norm(a, tol);
  return commutator <= tol.normality * na * na;
}

}  // namespace mfbound
