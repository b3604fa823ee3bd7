#pragma once

#include <vector>

#include "mfbound/config.hpp"
#include "mfbound/matrix.hpp"

namespace mfbound {

/// Unitary reduction A = Q0^H H Q0 with H upper Hessenberg.
struct HessenbergForm {
  ComplexMatrix q;  // Q0
  ComplexMatrix h;
};

/// Complex Schur form A = Q^H T Q, T upper triangular, Q unitary.
struct SchurForm {
  ComplexMatrix q;
  ComplexMatrix t;
  std::size_t source_dim = 0;
  std::size_t sweeps = 0;  // QR iterations performed
};

/// Diagonal and strictly upper triangular parts of a Schur factor.
struct SchurSplit {
  ComplexMatrix diagonal;
  ComplexMatrix nilpotent;
};

HessenbergForm hessenberg(const ComplexMatrix& a);

/// Householder Hessenberg reduction followed by Wilkinson-shifted complex QR
/// with deflation. Throws NonConvergence past `schur_sweeps_per_dim * d`
/// iterations.
SchurForm schur(const ComplexMatrix& a, const Tolerances& tol = default_tolerances());

/// Spectrum as a multiset, read off the Schur diagonal.
std::vector<Complex> eigenvalues(const ComplexMatrix& a, const Tolerances& tol = default_tolerances());

SchurSplit split_schur(const SchurForm& s);

/// Solves A X = B by LU with partial pivoting. Throws SingularMatrix when a
/// pivot vanishes to working precision.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix inverse(const ComplexMatrix& a);

/// ||A||_2 * ||A^-1||_2
double condition_number_2(const ComplexMatrix& a, const Tolerances& tol = default_tolerances());

/// True when ||A A^H - A^H A||_2 <= tol.normality * ||A||_2^2.
bool is_normal(const ComplexMatrix& a, const Tolerances& tol = default_tolerances());

}  // namespace mfbound
