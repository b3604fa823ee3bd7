#pragma once

// Reference computations used only by the tests. None of them share code
// paths with the library routines they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "mfbound/matrix.hpp"
#include "mfbound/random.hpp"

namespace oracle {

using mfbound::Complex;
using mfbound::ComplexMatrix;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Largest singular value from the Jacobi spectrum of the real embedding
/// of A^H A.
inline double largest_singular_value(const ComplexMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<std::vector<Complex>> h(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < a.rows(); ++k) h[i][j] += std::conj(a(k, i)) * a(k, j);
  std::vector<std::vector<double>> r(2 * n, std::vector<double>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r[i][j] = h[i][j].real();
      r[i + n][j + n] = h[i][j].real();
      r[i][j + n] = -h[i][j].imag();
      r[i + n][j] = h[i][j].imag();
    }
  }
  return std::sqrt(std::max(0.0, jacobi_eigenvalues(r).back()));
}

/// Plain triple-loop product.
inline ComplexMatrix naive_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

/// Spectral norm through the Jacobi oracle.
inline double norm2(const ComplexMatrix& a) { return largest_singular_value(a); }

/// Greedy matching of two multisets; returns the largest pairing distance.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  double worst = 0.0;
  for (const auto& z : a) {
    auto it = std::min_element(b.begin(), b.end(),
                               [&](const Complex& x, const Complex& y) { return std::abs(x - z) < std::abs(y - z); });
    if (it == b.end()) return INFINITY;
    worst = std::max(worst, std::abs(*it - z));
    b.erase(it);
  }
  return worst;
}

/// Hull vertices by brute force: p is a vertex iff it lies in no closed,
/// non-degenerate triangle of three other points and strictly inside no
/// segment between two other points.
inline std::vector<Complex> brute_force_hull_vertices(const std::vector<Complex>& pts) {
  auto cross = [](Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
  };
  std::vector<Complex> uniq;
  for (const auto& p : pts)
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
  const double eps = 1e-12;
  std::vector<Complex> out;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    const Complex p = uniq[i];
    bool inside = false;
    for (std::size_t a = 0; a < uniq.size() && !inside; ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < uniq.size() && !inside; ++b) {
        if (b == i) continue;
        // p strictly between a and b on a segment
        if (std::abs(cross(uniq[a], uniq[b], p)) <= eps &&
            ((p - uniq[a]) * std::conj(uniq[b] - p)).real() > eps)
          inside = true;
        for (std::size_t c = b + 1; c < uniq.size() && !inside; ++c) {
          if (c == i || std::abs(cross(uniq[a], uniq[b], uniq[c])) <= eps) continue;
          const double d1 = cross(uniq[a], uniq[b], p);
          const double d2 = cross(uniq[b], uniq[c], p);
          const double d3 = cross(uniq[c], uniq[a], p);
          const bool neg = d1 < -eps || d2 < -eps || d3 < -eps;
          const bool pos = d1 > eps || d2 > eps || d3 > eps;
          if (!(neg && pos)) inside = true;  // inside or on the triangle
        }
      }
    }
    if (!inside) out.push_back(p);
  }
  return out;
}

/// Random matrix T with independent real/imaginary parts in [-1, 1] plus
/// `shift` on the diagonal.
inline ComplexMatrix random_shifted(std::size_t d, mfbound::Rng& rng, double shift) {
  ComplexMatrix t = mfbound::random_matrix(d, rng);
  for (std::size_t i = 0; i < d; ++i) t(i, i) += shift;
  return t;
}

}  // namespace oracle
