#pragma once

#include "mfbound/matrix.hpp"

namespace mfbound {

/// e^A together with the parameters the evaluator picked.
struct ExpmResult {
  ComplexMatrix value;
  int pade_degree = 0;
  int squarings = 0;
};

/// Scaling and squaring with a diagonal Pade approximant of degree
/// 3, 5, 7, 9 or 13. Degree and squaring count are chosen from ||A||_2.
ExpmResult matrix_exp_detailed(const ComplexMatrix& a);

ComplexMatrix matrix_exp(const ComplexMatrix& a);

}  // namespace mfbound
