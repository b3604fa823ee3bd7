#pragma once

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfbound/interp.hpp"
#include "mfbound/matrix.hpp"
#include "mfbound/random.hpp"

namespace mfbound {

/// Closed rectangle [re_lo, re_hi] x [im_lo, im_hi] in the complex plane.
struct SpectralRect {
  double re_lo = -1.0;
  double re_hi = 0.0;
  double im_lo = -std::numbers::pi;
  double im_hi = std::numbers::pi;

  bool contains(Complex z, double slack = 0.0) const {
    return z.real() >= re_lo - slack && z.real() <= re_hi + slack && z.imag() >= im_lo - slack &&
           z.imag() <= im_hi + slack;
  }
};

struct ExperimentConfig {
  std::size_t dim = 128;
  std::size_t trials = 100;
  SpectralRect rect{};
  double kappa_cutoff = 1e5;
  std::size_t t_count = 101;
  std::uint64_t seed = 1;
  unsigned threads = 1;  // trials run in parallel; 0 = all cores
  /// Compare the diagonalization reference against matrix_exp when
  /// dim <= this value.
  std::size_t crosscheck_max_dim = 64;
};

/// Throws InvalidArgument on an inconsistent configuration.
void validate(const ExperimentConfig& cfg);

/// A = T D T^-1 with D = diag(d) sampled from a rectangle and T real.
struct TrialMatrices {
  ComplexMatrix t;
  ComplexMatrix t_inv;
  std::vector<Complex> d;
  ComplexMatrix a;
  std::size_t redraws = 0;  // singular T draws that were discarded
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed_offset = 0;
  double e0 = 0.0;     // ||e^A - p(A)||_2
  double e1 = 0.0;     // exponential certificate on the t grid
  double ratio = 0.0;  // e1 / e0
  double kappa = 0.0;  // condition number of T
  bool excluded = false;
  bool valid = true;
  std::size_t redraws = 0;
  /// ||matrix_exp(A) - T e^D T^-1|| / ||T e^D T^-1|| when computed.
  std::optional<double> expm_crosscheck;
};

struct ExperimentStats {
  std::size_t kept = 0;
  std::size_t excluded_count = 0;
  std::size_t invalid_count = 0;
  double e0_mean = 0.0, e0_std = 0.0;
  double e1_mean = 0.0, e1_std = 0.0;
  double ratio_mean = 0.0, ratio_std = 0.0;
  double ratio_median = 0.0;
  double kappa_mean_kept = 0.0, kappa_std_kept = 0.0;
  double kappa_mean_all = 0.0, kappa_std_all = 0.0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  ExperimentStats stats;
  std::vector<std::string> log;
};

/// The 16 interpolation points 0, +-i pi, +-i pi/2, +-3i pi/4, -1,
/// -1 +- i pi, -1 +- i pi/2, -1 +- 3i pi/4, -1/2 +- i pi, in that order.
NodeSet paper_nodes();

/// Draws D uniformly from `rect` (independent real and imaginary parts)
/// and T with real entries uniform on [-1, 1]. A singular T is redrawn at
/// most 5 times before SingularMatrix is thrown.
TrialMatrices random_trial_matrix(std::size_t dim, const SpectralRect& rect, Rng& rng);

/// T diag(e^{t d}) T^-1
ComplexMatrix sharp_exp(const ComplexMatrix& t_mat, const ComplexMatrix& t_inv, std::span<const Complex> d,
                        double t);
/// Same, solving against T instead of using a precomputed inverse.
ComplexMatrix sharp_exp(const ComplexMatrix& t_mat, std::span<const Complex> d, double t);

/// One trial with generator seed cfg.seed + trial_index. Linear-algebra
/// failures trigger a redraw; after 5 failures the record is marked invalid.
TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t trial_index,
                      std::vector<std::string>* log = nullptr);

/// All trials plus statistics over valid, non-excluded trials. Throws
/// ComputationError when more than half of the trials are invalid.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

ExperimentStats summarize(const std::vector<TrialRecord>& records);

/// (t, ||Omega(A) T e^{tD} T^-1||_2) on the uniform t grid.
std::vector<std::pair<double, double>> norms_curve(const TrialMatrices& m, const NodeSet& nodes,
                                                   std::size_t t_count);
/// Same for a general matrix, with e^{tA} from matrix_exp.
std::vector<std::pair<double, double>> norms_curve(const ComplexMatrix& a, const NodeSet& nodes,
                                                   std::size_t t_count);

/// Header `trial,e0,e1,ratio,kappa,excluded`, 17 significant digits.
void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records);
void write_curve_csv(std::ostream& out, const std::vector<std::pair<double, double>>& curve);

}  // namespace mfbound
