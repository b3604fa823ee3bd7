#pragma once

#include <functional>
#include <string>

#include "mfbound/config.hpp"
#include "mfbound/matrix.hpp"
#include "mfbound/random.hpp"

namespace mfbound {

/// Largest singular value by power iteration on A^H A.
///
/// Starts from a random vector drawn from `rng`, stops when the extrapolated
/// error of the Rayleigh quotient falls below `tol.norm_rel`, and restarts
/// with a fresh vector up to `tol.norm_restarts` times. Throws
/// NonConvergence (carrying the best estimate) when every attempt hits
/// `tol.norm_max_iters`.
double spectral_norm(const ComplexMatrix& a, Rng& rng, const Tolerances& tol = default_tolerances());

/// Same, with a fixed-seed generator so results are reproducible.
double spectral_norm(const ComplexMatrix& a, const Tolerances& tol = default_tolerances());

double frobenius_norm(const ComplexMatrix& a);

/// Maximum absolute column sum.
double one_norm(const ComplexMatrix& a);

enum class NormKind { spectral, frobenius, one, custom };

/// A matrix norm the bound engine can be parameterized over.
class MatrixNorm {
public:
  static MatrixNorm spectral(const Tolerances& tol = default_tolerances());
  static MatrixNorm frobenius();
  static MatrixNorm one();
  static MatrixNorm custom(std::string name, std::function<double(const ComplexMatrix&)> fn);

  /// Looks up "spectral" (alias "2"), "frobenius" ("fro"), or "one" ("1").
  static MatrixNorm by_name(const std::string& name);

  double operator()(const ComplexMatrix& a) const { return fn_(a); }
  NormKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

private:
  MatrixNorm(NormKind kind, std::string name, std::function<double(const ComplexMatrix&)> fn)
      : kind_(kind), name_(std::move(name)), fn_(std::move(fn)) {}

  NormKind kind_;
  std::string name_;
  std::function<double(const ComplexMatrix&)> fn_;
};

}  // namespace mfbound
