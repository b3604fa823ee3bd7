#include <doctest.h>

#include <cmath>
#include <sstream>

#include "mfbound/bounds.hpp"
#include "mfbound/decomp.hpp"
#include "mfbound/error.hpp"
#include "mfbound/experiment.hpp"
#include "mfbound/expm.hpp"
#include "mfbound/hull.hpp"
#include "mfbound/norms.hpp"
#include "mfbound/report_json.hpp"
#include "oracles.hpp"

using namespace mfbound;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.dim = 12;
  cfg.trials = 6;
  cfg.seed = 99;
  cfg.t_count = 21;
  return cfg;
}

std::string csv_of(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  write_records_csv(out, records);
  return out.str();
}

}  // namespace

TEST_CASE("experiment nodes") {
  const NodeSet nodes = paper_nodes();
  CHECK(nodes.size() == 16);
  CHECK(nodes.max_real() == 0.0);
  CHECK(nodes.distinct().size() == 16);
  CHECK(convex_hull(nodes.values()).vertices.size() == 4);
  CHECK(factorial(16) == 20922789888000.0);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.dim = 1;
  CHECK_THROWS_AS(validate(cfg), InvalidArgument);
  cfg = {};
  cfg.trials = 0;
  CHECK_THROWS_AS(validate(cfg), InvalidArgument);
  cfg = {};
  cfg.rect.re_lo = 1.0;
  CHECK_THROWS_AS(validate(cfg), InvalidArgument);
  cfg = {};
  cfg.rect = {-0.5, -0.5, 0.0, 0.0};
  CHECK_NOTHROW(validate(cfg));
}

TEST_CASE("trial matrices") {
  Rng rng(5);
  const SpectralRect rect{};
  const auto m = random_trial_matrix(10, rect, rng);
  for (auto z : m.d) CHECK(rect.contains(z));
  for (auto z : m.t.data()) CHECK(z.imag() == 0.0);
  CHECK(m.a.all_finite());
  const double kappa = condition_number_2(m.t);
  CHECK(oracle::multiset_distance(eigenvalues(m.a), m.d) <= 1e-6 * kappa);
  for (auto z : eigenvalues(m.a)) CHECK(rect.contains(z, 1e-6 * kappa));

  CHECK(spectral_norm(sharp_exp(m.t, m.t_inv, m.d, 0.0) - identity(10)) <= 1e-10 * kappa);
  const ComplexMatrix s1 = sharp_exp(m.t, m.t_inv, m.d, 0.7);
  CHECK(spectral_norm(s1 - matrix_exp(scalar_mul(0.7, m.a))) <= 1e-7 * kappa);
  CHECK(spectral_norm(s1 - sharp_exp(m.t, m.d, 0.7)) <= 1e-10 * kappa * spectral_norm(s1));

  const std::vector<Complex> d{Complex{-0.5, 1.0}, Complex{0.0, -2.0}};
  std::vector<Complex> ed;
  for (auto z : d) ed.push_back(std::exp(0.3 * z));
  const ComplexMatrix sd = sharp_exp(identity(2), identity(2), d, 0.3);
  CHECK(spectral_norm(sd - ComplexMatrix::diagonal(ed)) <= 1e-15);
  CHECK(sd(0, 1) == Complex{});
}

TEST_CASE("single trial records") {
  const ExperimentConfig cfg = small_config();
  const TrialRecord r = run_trial(cfg, 2);
  CHECK(r.valid);
  CHECK(r.trial == 2);
  CHECK(r.seed_offset == 2);
  CHECK(r.ratio == r.e1 / r.e0);
  CHECK(r.excluded == (r.kappa > cfg.kappa_cutoff));
  CHECK(r.e1 >= r.e0);
  REQUIRE(r.expm_crosscheck.has_value());
  CHECK(*r.expm_crosscheck < 1e-8);

  // Reproducibility.
  const TrialRecord again = run_trial(cfg, 2);
  CHECK(again.e0 == r.e0);
  CHECK(again.e1 == r.e1);
  CHECK(again.kappa == r.kappa);
}

TEST_CASE("norms curve agrees with the trial") {
  const ExperimentConfig cfg = small_config();
  Rng rng(cfg.seed + 1);
  const auto m = random_trial_matrix(cfg.dim, cfg.rect, rng);
  const NodeSet nodes = paper_nodes();
  const auto curve = norms_curve(m, nodes, cfg.t_count);
  CHECK(curve.size() == cfg.t_count);
  CHECK(curve.front().first == 0.0);
  CHECK(curve.back().first == 1.0);
  CHECK(std::abs(curve.front().second - spectral_norm(omega_at_matrix(nodes, m.a))) <=
        1e-8 * curve.front().second);

  double best = 0.0;
  for (const auto& [t, v] : curve) best = std::max(best, v);
  const TrialRecord r = run_trial(cfg, 1);
  CHECK(best / factorial(16) == doctest::Approx(r.e1).epsilon(1e-12));

  const auto general = norms_curve(m.a, nodes, cfg.t_count);
  for (std::size_t k = 0; k < curve.size(); ++k)
    CHECK(general[k].second == doctest::Approx(curve[k].second).epsilon(1e-6));
}

TEST_CASE("experiment run") {
  ExperimentConfig cfg = small_config();
  const auto res = run_experiment(cfg);
  REQUIRE(res.records.size() == cfg.trials);
  for (std::size_t i = 0; i < res.records.size(); ++i) {
    CHECK(res.records[i].trial == i);
    CHECK(res.records[i].e1 >= res.records[i].e0);
  }
  std::size_t excluded = 0;
  for (const auto& r : res.records) excluded += r.excluded ? 1 : 0;
  CHECK(res.stats.excluded_count == excluded);
  CHECK(res.stats.kept + excluded == cfg.trials);

  cfg.threads = 3;
  const auto par = run_experiment(cfg);
  CHECK(csv_of(par.records) == csv_of(res.records));
  CHECK(to_json(par.stats).dump() == to_json(res.stats).dump());

  cfg.kappa_cutoff = 1.0;
  const auto all_out = run_experiment(cfg);
  CHECK(all_out.stats.kept == 0);
  CHECK(all_out.stats.excluded_count == cfg.trials);
  CHECK(all_out.stats.kappa_mean_all == doctest::Approx(res.stats.kappa_mean_all));
}

TEST_CASE("near-scalar configuration") {
  ExperimentConfig cfg;
  cfg.dim = 2;
  cfg.trials = 1;
  cfg.rect = {-0.5, -0.5, 0.0, 0.0};
  const auto res = run_experiment(cfg);
  const auto& r = res.records.at(0);
  CHECK(r.valid);
  // For A = z 1 both quantities carry the scalar factor |Omega(z)|, so they
  // differ only by |f[nodes, z]| versus max_t e^{(1-t) beta + t Re z} / 16!.
  const NodeSet nodes = paper_nodes();
  std::vector<Complex> ext(nodes.begin(), nodes.end());
  ext.push_back(-0.5);
  const double omega = std::abs(omega_at_scalar(nodes, -0.5));
  CHECK(r.e0 == doctest::Approx(omega * std::abs(divided_difference(AnalyticFunction::exponential(), ext))).epsilon(1e-4));
  CHECK(r.e1 == doctest::Approx(omega / factorial(16)).epsilon(1e-10));
  CHECK(r.e0 <= r.e1);
}

TEST_CASE("summary statistics") {
  std::vector<TrialRecord> recs(4);
  const double e0s[] = {1.0, 2.0, 3.0, 4.0};
  for (std::size_t i = 0; i < 4; ++i) {
    recs[i].trial = i;
    recs[i].e0 = e0s[i];
    recs[i].e1 = 2.0 * e0s[i];
    recs[i].ratio = 2.0;
    recs[i].kappa = 10.0 * e0s[i];
  }
  recs[3].excluded = true;
  recs[2].valid = false;
  const auto s = summarize(recs);
  CHECK(s.kept == 2);
  CHECK(s.excluded_count == 1);
  CHECK(s.invalid_count == 1);
  CHECK(s.e0_mean == 1.5);
  CHECK(s.e0_std == doctest::Approx(std::sqrt(0.5)));
  CHECK(s.ratio_median == 2.0);
  CHECK(s.ratio_std == 0.0);
  CHECK(s.kappa_mean_kept == 15.0);
  CHECK(s.kappa_mean_all == doctest::Approx(70.0 / 3.0));

  const std::string csv = csv_of(recs);
  CHECK(csv.rfind("trial,e0,e1,ratio,kappa,excluded\n", 0) == 0);
  CHECK(csv.find("2,nan,nan,nan,nan,invalid") != std::string::npos);
  CHECK(csv.find("3,4,8,2,40,true") != std::string::npos);

  const auto j = to_json(s);
  CHECK(j.contains("kappa_mean_all"));
  CHECK(j.contains("kappa_mean_kept"));
}
