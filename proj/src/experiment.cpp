#include "mfbound/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "mfbound/bounds.hpp"
#include "mfbound/decomp.hpp"
#include "mfbound/error.hpp"
#include "mfbound/expm.hpp"
#include "mfbound/norms.hpp"
#include "mfbound/parallel.hpp"

namespace mfbound {

namespace {

constexpr int kMaxRedraws = 5;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<Complex> exp_scaled(std::span<const Complex> d, double t) {
  std::vector<Complex> e(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) e[i] = std::exp(t * d[i]);
  return e;
}

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

// Sample standard deviation (divisor n - 1); zero for fewer than 2 values.
MeanStd mean_std(const std::vector<double>& v) {
  MeanStd r;
  if (v.empty()) return r;
  for (double x : v) r.mean += x;
  r.mean /= static_cast<double>(v.size());
  if (v.size() < 2) return r;
  double ss = 0.0;
  for (double x : v) ss += (x - r.mean) * (x - r.mean);
  r.std = std::sqrt(ss / static_cast<double>(v.size() - 1));
  return r;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

TrialRecord evaluate_trial(const ExperimentConfig& cfg, const TrialMatrices& m) {
  static const NodeSet nodes = paper_nodes();
  const auto exp_fn = AnalyticFunction::exponential();
  const auto p = divided_differences(exp_fn, nodes);

  TrialRecord rec;
  rec.redraws = m.redraws;
  const ComplexMatrix sharp = sharp_exp(m.t, m.t_inv, m.d, 1.0);
  rec.e0 = spectral_norm(sharp - newton_eval_matrix(p, m.a));

  // Omega(A) T e^{tD} T^-1 = (Omega(A) T) diag(e^{tD}) T^-1
  const ComplexMatrix omega_t = mat_mul(omega_at_matrix(nodes, m.a), m.t);
  const double beta = nodes.max_real();
  double best = 0.0;
  for (double t : t_grid(cfg.t_count)) {
    const ComplexMatrix mt = mat_mul(scale_columns(omega_t, exp_scaled(m.d, t)), m.t_inv);
    best = std::max(best, std::exp((1.0 - t) * beta) * spectral_norm(mt));
  }
  rec.e1 = best / factorial(nodes.size());
  rec.ratio = rec.e0 > 0.0 ? rec.e1 / rec.e0 : std::numeric_limits<double>::infinity();
  rec.kappa = spectral_norm(m.t) * spectral_norm(m.t_inv);
  rec.excluded = rec.kappa > cfg.kappa_cutoff;

  if (cfg.dim <= cfg.crosscheck_max_dim) {
    rec.expm_crosscheck = spectral_norm(matrix_exp(m.a) - sharp) / spectral_norm(sharp);
  }
  return rec;
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  if (cfg.dim < 2) throw InvalidArgument("experiment: dim must be at least 2");
  if (cfg.trials < 1) throw InvalidArgument("experiment: trials must be at least 1");
  if (cfg.t_count < 2) throw InvalidArgument("experiment: t_count must be at least 2");
  if (!(cfg.rect.re_lo <= cfg.rect.re_hi) || !(cfg.rect.im_lo <= cfg.rect.im_hi))
    throw InvalidArgument("experiment: rectangle bounds are inverted");
  if (!(cfg.kappa_cutoff > 0.0)) throw InvalidArgument("experiment: kappa cutoff must be positive");
}

NodeSet paper_nodes() {
  constexpr double pi = std::numbers::pi;
  const Complex i{0.0, 1.0};
  return NodeSet({0.0, i * pi, -i * pi, i * pi / 2.0, -i * pi / 2.0, 3.0 * i * pi / 4.0, -3.0 * i * pi / 4.0,
                  -1.0, -1.0 + i * pi, -1.0 - i * pi, -1.0 + i * pi / 2.0, -1.0 - i * pi / 2.0,
                  -1.0 + 3.0 * i * pi / 4.0, -1.0 - 3.0 * i * pi / 4.0, -0.5 + i * pi, -0.5 - i * pi});
}

TrialMatrices random_trial_matrix(std::size_t dim, const SpectralRect& rect, Rng& rng) {
  TrialMatrices m;
  m.d.resize(dim);
  for (auto& di : m.d) {
    const double re = rng.uniform(rect.re_lo, rect.re_hi);
    di = {re, rng.uniform(rect.im_lo, rect.im_hi)};
  }
  for (int attempt = 0;; ++attempt) {
    m.t = ComplexMatrix(dim, dim);
    for (auto& z : m.t.data()) z = rng.uniform(-1.0, 1.0);
    try {
      m.t_inv = inverse(m.t);
      break;
    } catch (const SingularMatrix&) {
      if (attempt + 1 >= kMaxRedraws) throw;
      ++m.redraws;
    }
  }
  m.a = mat_mul(scale_columns(m.t, m.d), m.t_inv);
  return m;
}

ComplexMatrix sharp_exp(const ComplexMatrix& t_mat, const ComplexMatrix& t_inv, std::span<const Complex> d,
                        double t) {
  return mat_mul(scale_columns(t_mat, exp_scaled(d, t)), t_inv);
}

ComplexMatrix sharp_exp(const ComplexMatrix& t_mat, std::span<const Complex> d, double t) {
  // T E T^-1 = (T^-H (T E)^H)^H
  const ComplexMatrix te = scale_columns(t_mat, exp_scaled(d, t));
  return solve(t_mat.adjoint(), te.adjoint()).adjoint();
}

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t trial_index, std::vector<std::string>* log) {
  validate(cfg);
  const std::uint64_t offset = trial_index;
  Rng rng(cfg.seed + offset);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    try {
      TrialMatrices m = random_trial_matrix(cfg.dim, cfg.rect, rng);
      if (log && m.redraws > 0)
        log->push_back("trial " + std::to_string(trial_index) + ": redrew singular T " +
                       std::to_string(m.redraws) + " time(s)");
      TrialRecord rec = evaluate_trial(cfg, m);
      rec.trial = trial_index;
      rec.seed_offset = offset;
      return rec;
    } catch (const ComputationError& e) {
      if (log) log->push_back("trial " + std::to_string(trial_index) + ": " + e.what() + "; redrawing");
    }
  }
  TrialRecord rec;
  rec.trial = trial_index;
  rec.seed_offset = offset;
  rec.valid = false;
  return rec;
}

ExperimentStats summarize(const std::vector<TrialRecord>& records) {
  ExperimentStats s;
  std::vector<double> e0, e1, ratio, kappa_kept, kappa_all;
  for (const auto& r : records) {
    if (!r.valid) {
      ++s.invalid_count;
      continue;
    }
    kappa_all.push_back(r.kappa);
    if (r.excluded) {
      ++s.excluded_count;
      continue;
    }
    e0.push_back(r.e0);
    e1.push_back(r.e1);
    ratio.push_back(r.ratio);
    kappa_kept.push_back(r.kappa);
  }
  s.kept = e0.size();
  const auto me0 = mean_std(e0), me1 = mean_std(e1), mr = mean_std(ratio);
  const auto mk = mean_std(kappa_kept), ma = mean_std(kappa_all);
  s.e0_mean = me0.mean, s.e0_std = me0.std;
  s.e1_mean = me1.mean, s.e1_std = me1.std;
  s.ratio_mean = mr.mean, s.ratio_std = mr.std;
  s.ratio_median = median(ratio);
  s.kappa_mean_kept = mk.mean, s.kappa_std_kept = mk.std;
  s.kappa_mean_all = ma.mean, s.kappa_std_all = ma.std;
  return s;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  struct Slot {
    TrialRecord rec;
    std::vector<std::string> log;
  };
  auto slots = parallel_map<Slot>(cfg.trials, cfg.threads, [&](std::size_t i) {
    Slot s;
    s.rec = run_trial(cfg, i, &s.log);
    return s;
  });

  ExperimentResult result;
  for (auto& s : slots) {
    result.records.push_back(s.rec);
    for (auto& line : s.log) result.log.push_back(std::move(line));
    if (s.rec.expm_crosscheck) {
      result.log.push_back("trial " + std::to_string(s.rec.trial) +
                           ": matrix_exp cross-check relative difference " + fmt17(*s.rec.expm_crosscheck));
    }
  }
  result.stats = summarize(result.records);
  if (2 * result.stats.invalid_count > cfg.trials) {
    throw ComputationError("experiment: " + std::to_string(result.stats.invalid_count) + " of " +
                           std::to_string(cfg.trials) + " trials failed");
  }
  return result;
}

std::vector<std::pair<double, double>> norms_curve(const TrialMatrices& m, const NodeSet& nodes,
                                                   std::size_t t_count) {
  const ComplexMatrix omega_t = mat_mul(omega_at_matrix(nodes, m.a), m.t);
  std::vector<std::pair<double, double>> curve;
  for (double t : t_grid(t_count)) {
    curve.emplace_back(t, spectral_norm(mat_mul(scale_columns(omega_t, exp_scaled(m.d, t)), m.t_inv)));
  }
  return curve;
}

std::vector<std::pair<double, double>> norms_curve(const ComplexMatrix& a, const NodeSet& nodes,
                                                   std::size_t t_count) {
  const ComplexMatrix omega = omega_at_matrix(nodes, a);
  std::vector<std::pair<double, double>> curve;
  for (double t : t_grid(t_count)) {
    curve.emplace_back(t, spectral_norm(mat_mul(omega, matrix_exp(scalar_mul(t, a)))));
  }
  return curve;
}

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "trial,e0,e1,ratio,kappa,excluded\n";
  for (const auto& r : records) {
    if (!r.valid) {
      out << r.trial << ",nan,nan,nan,nan,invalid\n";
      continue;
    }
    out << r.trial << ',' << fmt17(r.e0) << ',' << fmt17(r.e1) << ',' << fmt17(r.ratio) << ','
        << fmt17(r.kappa) << ',' << (r.excluded ? "true" : "false") << '\n';
  }
}

void write_curve_csv(std::ostream& out, const std::vector<std::pair<double, double>>& curve) {
  out << "t,norm\n";
  for (const auto& [t, v] : curve) out << fmt17(t) << ',' << fmt17(v) << '\n';
}

}  // namespace mfbound
