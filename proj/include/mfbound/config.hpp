#pragma once

#include <cstddef>

namespace mfbound {

/// Every numerical tolerance used by the library, in one place.
/// Tolerances suffixed `_per_dim` are multiplied by the matrix dimension.
struct Tolerances {
  double unitarity_per_dim = 1e-10;    // ||Q Q^H - 1|| of Schur factors
  double reconstruct_per_dim = 1e-10;  // ||Q^H T Q - A|| / ||A||
  double norm_rel = 1e-12;             // power iteration stopping rule
  std::size_t norm_max_iters = 20000;  // per attempt
  std::size_t norm_restarts = 2;
  std::size_t schur_sweeps_per_dim = 30;
  double normality = 1e-10;            // ||A A^H - A^H A|| / ||A||^2
  double coeff_growth_limit = 1e150;   // divided-difference overflow guard
  double node_gap_warning = 1e-8;      // relative to node spread
  double refinement_rel = 5e-3;        // grid refinement stability (0.5%)
  double collinear_rel = 1e-12;        // hull cross-product threshold / diam^2
  double hull_contains_rel = 1e-12;    // hull membership / diameter
};

/// Library-wide defaults.
inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace mfbound
