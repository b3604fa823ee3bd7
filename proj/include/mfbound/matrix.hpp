#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mfbound {

using Complex = std::complex<double>;

/// Dense complex matrix stored row-major. All entries are finite.
class ComplexMatrix {
public:
  ComplexMatrix() = default;

  /// Zero-filled rows x cols matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major `entries`; rejects size mismatch and
  /// non-finite values.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Row-by-row literal, e.g. {{1, 2}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zeros(std::size_t d) { return ComplexMatrix(d, d); }
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<Complex> diag() const;

  /// Conjugate transpose.
  ComplexMatrix adjoint() const;

  bool all_finite() const noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// d x d identity; d must be positive.
ComplexMatrix identity(std::size_t d);

ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scalar_mul(Complex c, const ComplexMatrix& a);

/// A + c*1 for square A.
ComplexMatrix shift(const ComplexMatrix& a, Complex c);

/// s*A + c*1 for square A, in one pass.
ComplexMatrix affine(const ComplexMatrix& a, Complex s, Complex c);

/// y = A x
std::vector<Complex> mat_vec(const ComplexMatrix& a, std::span<const Complex> x);
/// y = A^H x
std::vector<Complex> adjoint_vec(const ComplexMatrix& a, std::span<const Complex> x);

/// A * diag(d)
ComplexMatrix scale_columns(const ComplexMatrix& a, std::span<const Complex> d);

/// Throws Overflow if any entry of `a` is not finite; `what` names the operation.
void require_finite(const ComplexMatrix& a, const char* what);

void require_square(const ComplexMatrix& a, const char* what);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex c, const ComplexMatrix& a);

}  // namespace mfbound
