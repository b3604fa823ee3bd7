#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mfbound/config.hpp"
#include "mfbound/matrix.hpp"

namespace mfbound {

/// Ordered multiset of interpolation points. Repeated values are
/// meaningful: a node of multiplicity k imposes k Hermite conditions.
/// Equality is exact complex equality.
class NodeSet {
public:
  explicit NodeSet(std::vector<Complex> nodes);

  std::size_t size() const noexcept { return nodes_.size(); }
  const Complex& operator[](std::size_t k) const { return nodes_[k]; }
  std::span<const Complex> values() const noexcept { return nodes_; }
  auto begin() const noexcept { return nodes_.begin(); }
  auto end() const noexcept { return nodes_.end(); }

  std::size_t multiplicity(Complex z) const;
  std::size_t max_multiplicity() const;
  /// Distinct values in order of first occurrence.
  std::vector<Complex> distinct() const;
  double max_real() const;
  /// Largest pairwise distance.
  double spread() const;
  /// Smallest distance between two distinct values; +inf with one value.
  double min_distinct_gap() const;

private:
  std::vector<Complex> nodes_;
};

enum class FunctionKind { exponential, polynomial, custom };

/// A scalar analytic function together with what the bounds need from it:
/// scalar derivatives for the divided differences and a matrix evaluator
/// of a derivative for the certificate integrand.
///
/// Custom callables must be safe to call concurrently.
struct AnalyticFunction {
  std::string name;
  FunctionKind kind = FunctionKind::custom;
  std::function<Complex(Complex)> scalar_eval;
  std::function<Complex(std::size_t, Complex)> scalar_derivative;
  std::function<ComplexMatrix(std::size_t, const ComplexMatrix&)> matrix_nth_derivative;
  std::size_t max_order = 0;

  /// Derivative of order k, checked against max_order.
  Complex derivative(std::size_t k, Complex z) const;
  /// Matrix derivative of order k, checked against max_order.
  ComplexMatrix matrix_derivative(std::size_t k, const ComplexMatrix& a) const;

  static AnalyticFunction exponential();
  /// sum_k coeffs[k] z^k
  static AnalyticFunction polynomial(std::vector<Complex> coeffs);
};

/// Newton form c0 + (z - z1)(c1 + (z - z2)(c2 + ...)) with
/// ck = f[z1, ..., z(k+1)] in the caller's node order.
struct NewtonPolynomial {
  NodeSet nodes;
  std::vector<Complex> coeffs;
  std::vector<std::string> warnings;
};

/// f[points] for an arbitrary multiset, via the confluent tableau on the
/// points sorted by (re, im).
Complex divided_difference(const AnalyticFunction& f, std::span<const Complex> points,
                           const Tolerances& tol = default_tolerances());

/// Hermite interpolation polynomial of f on `nodes`. Throws
/// ConditioningError when a coefficient exceeds tol.coeff_growth_limit and
/// InvalidArgument when f lacks the derivatives repeated nodes need.
NewtonPolynomial divided_differences(const AnalyticFunction& f, const NodeSet& nodes,
                                     const Tolerances& tol = default_tolerances());

/// Divided difference from its integral representation over the simplex
/// 0 <= tn <= ... <= t1 <= 1, by nested 32-point Gauss-Legendre.
/// Independent of the tableau; at most 5 points.
Complex dd_integral_oracle(const AnalyticFunction& f, std::span<const Complex> points);

Complex newton_eval_scalar(const NewtonPolynomial& p, Complex z);

/// p(z), p'(z), ..., p^(order)(z) by differentiated Horner recurrences.
std::vector<Complex> newton_eval_derivatives(const NewtonPolynomial& p, Complex z, std::size_t order);

ComplexMatrix newton_eval_matrix(const NewtonPolynomial& p, const ComplexMatrix& a);

/// prod_k (z - zk) in node order.
Complex omega_at_scalar(const NodeSet& nodes, Complex z);

/// prod_k (A - zk 1), accumulated left to right.
ComplexMatrix omega_at_matrix(const NodeSet& nodes, const ComplexMatrix& a);

/// Zeros of the degree-m Chebyshev polynomial mapped to [a, b], increasing.
NodeSet chebyshev_nodes(std::size_t m, double a = -1.0, double b = 1.0);

/// z1 repeated m times; interpolation there is the truncated Taylor series.
NodeSet taylor_nodes(Complex z1, std::size_t m);

/// m! as a double, accumulated exactly in integers while it fits.
double factorial(std::size_t m);

}  // namespace mfbound
