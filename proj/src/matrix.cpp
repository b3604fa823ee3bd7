#include "mfbound/matrix.hpp"

#include <cmath>
#include <string>

#include "mfbound/error.hpp"

namespace mfbound {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()) + " differ");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("ComplexMatrix: expected " + std::to_string(rows * cols) +
                            " entries, got " + std::to_string(data_.size()));
  }
  if (!all_finite()) throw InvalidArgument("ComplexMatrix: non-finite entry");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw InvalidArgument("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  if (!m.all_finite()) throw InvalidArgument("ComplexMatrix::diagonal: non-finite entry");
  return m;
}

std::vector<Complex> ComplexMatrix::diag() const {
  std::vector<Complex> d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix h(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) h(j, i) = std::conj((*this)(i, j));
  return h;
}

bool ComplexMatrix::all_finite() const noexcept {
  for (const auto& z : data_)
    if (!finite(z)) return false;
  return true;
}

ComplexMatrix identity(std::size_t d) {
  if (d == 0) throw InvalidArgument("identity: dimension must be positive");
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

void require_finite(const ComplexMatrix& a, const char* what) {
  if (!a.all_finite()) throw Overflow(std::string(what) + ": result is not finite");
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.is_square() || a.empty()) {
    throw DimensionMismatch(std::string(what) + ": square non-empty matrix required, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "mat_add");
  ComplexMatrix c = a;
  auto cd = c.data();
  auto bd = b.data();
  for (std::size_t k = 0; k < cd.size(); ++k) cd[k] += bd[k];
  require_finite(c, "mat_add");
  return c;
}

ComplexMatrix mat_sub(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "mat_sub");
  ComplexMatrix c = a;
  auto cd = c.data();
  auto bd = b.data();
  for (std::size_t k = 0; k < cd.size(); ++k) cd[k] -= bd[k];
  require_finite(c, "mat_sub");
  return c;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()) + " differ");
  }
  const std::size_t n = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t m = b.cols();
  ComplexMatrix c(n, m);
  // Split real/imaginary arithmetic avoids the NaN-recovery path of
  // std::complex multiplication and lets the inner loop vectorize.
  const double* bp = reinterpret_cast<const double*>(b.data().data());
  double* cp = reinterpret_cast<double*>(c.data().data());
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = cp + 2 * i * m;
    for (std::size_t k = 0; k < inner; ++k) {
      const double ar = a(i, k).real();
      const double ai = a(i, k).imag();
      if (ar == 0.0 && ai == 0.0) continue;
      const double* brow = bp + 2 * k * m;
      for (std::size_t j = 0; j < m; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
  require_finite(c, "mat_mul");
  return c;
}

ComplexMatrix scalar_mul(Complex s, const ComplexMatrix& a) {
  ComplexMatrix c = a;
  for (auto& z : c.data()) z *= s;
  require_finite(c, "scalar_mul");
  return c;
}

ComplexMatrix shift(const ComplexMatrix& a, Complex c) {
  require_square(a, "shift");
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) += c;
  require_finite(r, "shift");
  return r;
}

ComplexMatrix affine(const ComplexMatrix& a, Complex s, Complex c) {
  require_square(a, "affine");
  ComplexMatrix r = a;
  for (auto& z : r.data()) z *= s;
  for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) += c;
  require_finite(r, "affine");
  return r;
}

std::vector<Complex> mat_vec(const ComplexMatrix& a, std::span<const Complex> x) {
  if (a.cols() != x.size()) throw DimensionMismatch("mat_vec: size mismatch");
  std::vector<Complex> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    double sr = 0.0, si = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      sr += r[j].real() * x[j].real() - r[j].imag() * x[j].imag();
      si += r[j].real() * x[j].imag() + r[j].imag() * x[j].real();
    }
    y[i] = {sr, si};
  }
  return y;
}

std::vector<Complex> adjoint_vec(const ComplexMatrix& a, std::span<const Complex> x) {
  if (a.rows() != x.size()) throw DimensionMismatch("adjoint_vec: size mismatch");
  std::vector<double> y(2 * a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    const double xr = x[i].real();
    const double xi = x[i].imag();
    for (std::size_t j = 0; j < r.size(); ++j) {
      // conj(a_ij) * x_i
      y[2 * j] += r[j].real() * xr + r[j].imag() * xi;
      y[2 * j + 1] += r[j].real() * xi - r[j].imag() * xr;
    }
  }
  std::vector<Complex> out(a.cols());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = {y[2 * j], y[2 * j + 1]};
  return out;
}

ComplexMatrix scale_columns(const ComplexMatrix& a, std::span<const Complex> d) {
  if (a.cols() != d.size()) throw DimensionMismatch("scale_columns: size mismatch");
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    auto row = r.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) row[j] *= d[j];
  }
  require_finite(r, "scale_columns");
  return r;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_add(a, b); }
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_sub(a, b); }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_mul(a, b); }
ComplexMatrix operator*(Complex c, const ComplexMatrix& a) { return scalar_mul(c, a); }

}  // namespace mfbound
