#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mfbound/decomp.hpp"
#include "mfbound/error.hpp"
#include "mfbound/experiment.hpp"
#include "mfbound/expm.hpp"
#include "mfbound/interp.hpp"
#include "mfbound/node_io.hpp"
#include "mfbound/norms.hpp"
#include "mfbound/random.hpp"
#include "oracles.hpp"

using namespace mfbound;

namespace {

const double e = std::numbers::e;

Complex random_in_disc(Rng& rng) {
  for (;;) {
    const Complex z = rng.unit_box();
    if (std::abs(z) < 1.0) return z;
  }
}

}  // namespace

TEST_CASE("node sets") {
  CHECK_THROWS_AS(NodeSet({}), InvalidArgument);
  CHECK_THROWS_AS(NodeSet({Complex{INFINITY, 0.0}}), InvalidArgument);
  const NodeSet n({1.0, 2.0, 1.0, Complex{0.0, 1.0}});
  CHECK(n.multiplicity(1.0) == 2);
  CHECK(n.max_multiplicity() == 2);
  CHECK(n.distinct().size() == 3);
  CHECK(n.max_real() == 2.0);
  CHECK(n.spread() == doctest::Approx(std::sqrt(5.0)));
  CHECK(n.min_distinct_gap() == doctest::Approx(1.0));
}

TEST_CASE("divided differences of the exponential") {
  const auto f = AnalyticFunction::exponential();
  CHECK(divided_differences(f, NodeSet({0.0})).coeffs == std::vector<Complex>{1.0});
  CHECK(divided_differences(f, NodeSet({0.0, 0.0})).coeffs == std::vector<Complex>{1.0, 1.0});
  const auto p01 = divided_differences(f, NodeSet({0.0, 1.0}));
  CHECK(std::abs(p01.coeffs[1] - (e - 1.0)) < 1e-15);
  CHECK(std::abs(p01.coeffs[1] - 1.718281828) < 1e-9);

  const std::vector<Complex> pts{0.0, 0.5, 1.0};
  const auto p = divided_differences(f, NodeSet(pts));
  CHECK(std::abs(p.coeffs[2] - dd_integral_oracle(f, pts)) < 1e-6);
}

TEST_CASE("integral oracle") {
  const auto f = AnalyticFunction::exponential();
  const std::vector<Complex> zz{0.0, 0.0};
  CHECK(std::abs(dd_integral_oracle(f, zz) - 1.0) < 1e-12);
  const std::vector<Complex> z01{0.0, 1.0};
  CHECK(std::abs(dd_integral_oracle(f, z01) - (e - 1.0)) < 1e-8);
  const auto sq = AnalyticFunction::polynomial({0.0, 0.0, 1.0});
  const std::vector<Complex> abc{Complex{0.3, 1.0}, -2.0, Complex{0.0, -0.7}};
  CHECK(std::abs(dd_integral_oracle(sq, abc) - 1.0) < 1e-12);
  CHECK_THROWS_AS(dd_integral_oracle(f, std::vector<Complex>(6, 0.0)), InvalidArgument);
}

TEST_CASE("derivative supply is checked") {
  const auto cubic = AnalyticFunction::polynomial({1.0, 2.0, 3.0, 4.0});
  CHECK(cubic.derivative(1, 2.0) == Complex{2.0 + 12.0 + 48.0});
  CHECK(cubic.derivative(4, 2.0) == Complex{});

  AnalyticFunction only_values;
  only_values.scalar_eval = [](Complex z) { return z; };
  only_values.scalar_derivative = [](std::size_t, Complex z) { return z; };
  only_values.max_order = 0;
  CHECK_NOTHROW(divided_differences(only_values, NodeSet({0.0, 1.0})));
  CHECK_THROWS_AS(divided_differences(only_values, NodeSet({0.0, 0.0})), InvalidArgument);
}

TEST_CASE("coefficient growth guard and gap warning") {
  const auto f = AnalyticFunction::exponential();
  std::vector<Complex> clustered;
  for (int k = 0; k < 40; ++k) clustered.push_back(1e-9 * k);
  CHECK_THROWS_AS(divided_differences(f, NodeSet(clustered)), ConditioningError);

  const auto p = divided_differences(f, NodeSet({0.0, 1e-10, 1.0}));
  CHECK_FALSE(p.warnings.empty());
  CHECK(divided_differences(f, NodeSet({0.0, 0.5, 1.0})).warnings.empty());
}

TEST_CASE("newton evaluation") {
  const auto f = AnalyticFunction::exponential();
  const auto p = divided_differences(f, NodeSet({Complex{0.2, 0.4}, -1.0, 0.5}));
  CHECK(newton_eval_scalar(p, Complex{0.2, 0.4}) == p.coeffs[0]);

  const auto taylor1 = divided_differences(f, NodeSet({0.0, 0.0}));
  for (Complex z : {Complex{0.3, -2.0}, Complex{5.0, 1.0}})
    CHECK(std::abs(newton_eval_scalar(taylor1, z) - (1.0 + z)) < 1e-15);

  const auto cheb = divided_differences(f, chebyshev_nodes(10));
  double worst = 0.0;
  for (int k = 0; k <= 1000; ++k) {
    const double x = k / 1000.0;
    worst = std::max(worst, std::abs(std::exp(x) - newton_eval_scalar(cheb, x)));
  }
  CHECK(worst == doctest::Approx(0.60e-9).epsilon(0.05));
}

TEST_CASE("matrix evaluation") {
  const auto f = AnalyticFunction::exponential();
  const auto constant = divided_differences(f, NodeSet({Complex{0.0, 1.0}}));
  CHECK(newton_eval_matrix(constant, identity(3)) == scalar_mul(std::exp(Complex{0.0, 1.0}), identity(3)));

  const auto p = divided_differences(f, NodeSet({0.0, 1.0, -1.0, Complex{0.0, 2.0}}));
  const std::vector<Complex> d{0.5, Complex{-0.3, 0.9}, 2.0};
  const ComplexMatrix pd = newton_eval_matrix(p, ComplexMatrix::diagonal(d));
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(pd(i, i) - newton_eval_scalar(p, d[i])) < 1e-13);

  Rng rng(77);
  const ComplexMatrix t = oracle::random_shifted(3, rng, 2.0);
  const ComplexMatrix tinv = inverse(t);
  const std::vector<Complex> lambda{Complex{-0.5, 1.0}, 0.25, Complex{0.1, -2.0}};
  std::vector<Complex> elambda;
  for (auto z : lambda) elambda.push_back(std::exp(z));
  const ComplexMatrix a = scale_columns(t, lambda) * tinv;
  const auto pe = divided_differences(f, NodeSet(lambda));
  const double kappa = condition_number_2(t);
  CHECK(spectral_norm(newton_eval_matrix(pe, a) - scale_columns(t, elambda) * tinv) <= 1e-8 * kappa);
}

TEST_CASE("omega") {
  const NodeSet nodes({1.0, -1.0, Complex{0.5, 2.0}});
  for (auto z : nodes) CHECK(omega_at_scalar(nodes, z) == Complex{});
  CHECK(omega_at_scalar(NodeSet({1.0, -1.0}), 0.0) == Complex{-1.0});

  const NodeSet cheb = chebyshev_nodes(10);
  double sup = 0.0;
  for (int k = 0; k <= 20000; ++k) sup = std::max(sup, std::abs(omega_at_scalar(cheb, -1.0 + k / 10000.0)));
  CHECK(std::abs(sup - std::ldexp(1.0, -9)) < 1e-6);

  const Complex z1{0.3, -0.2};
  CHECK(omega_at_matrix(NodeSet({z1}), scalar_mul(z1, identity(3))) == ComplexMatrix::zeros(3));

  const std::vector<Complex> d{0.5, Complex{-0.3, 0.9}, 2.0};
  const ComplexMatrix od = omega_at_matrix(nodes, ComplexMatrix::diagonal(d));
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(od(i, i) - omega_at_scalar(nodes, d[i])) < 1e-14);
}

TEST_CASE("omega vanishes at the spectrum") {
  Rng rng(303);
  const ComplexMatrix t = oracle::random_shifted(4, rng, 2.0);
  const std::vector<Complex> lambda{1.0, 1.0, Complex{0.0, 1.0}, -0.5};
  const ComplexMatrix a = scale_columns(t, lambda) * inverse(t);
  double scale = 1.0;
  for (auto z : lambda) scale *= spectral_norm(shift(a, -z));
  CHECK(spectral_norm(omega_at_matrix(NodeSet(lambda), a)) <= 1e-8 * scale);
}

TEST_CASE("chebyshev and taylor nodes") {
  CHECK(chebyshev_nodes(1).values()[0] == Complex{});
  const NodeSet c2 = chebyshev_nodes(2);
  CHECK(std::abs(c2[0] + std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(c2[1] - std::sqrt(0.5)) < 1e-15);
  const NodeSet c3 = chebyshev_nodes(3, 0.0, 2.0);
  CHECK(std::abs(c3[1] - 1.0) < 1e-15);
  CHECK_THROWS_AS(chebyshev_nodes(0), InvalidArgument);
  CHECK_THROWS_AS(chebyshev_nodes(3, 1.0, 1.0), InvalidArgument);

  const auto f = AnalyticFunction::exponential();
  CHECK(divided_differences(f, taylor_nodes(0.0, 3)).coeffs == std::vector<Complex>{1.0, 1.0, 0.5});
  const auto sq = AnalyticFunction::polynomial({0.0, 0.0, 1.0});
  const auto psq = divided_differences(sq, taylor_nodes(1.0, 3));
  for (Complex z : {Complex{2.0, 1.0}, Complex{-3.0, 0.0}}) CHECK(std::abs(newton_eval_scalar(psq, z) - z * z) < 1e-13);
  const auto p1 = divided_differences(f, taylor_nodes(Complex{0.0, 1.0}, 1));
  CHECK(newton_eval_scalar(p1, 7.0) == std::exp(Complex{0.0, 1.0}));

  CHECK(factorial(0) == 1.0);
  CHECK(factorial(16) == 20922789888000.0);
}

TEST_CASE("hermite interpolation conditions") {
  const auto f = AnalyticFunction::exponential();
  Rng rng(1001);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> nodes;
    const std::size_t distinct = 1 + rng.next_u64() % 4;
    for (std::size_t k = 0; k < distinct; ++k) {
      const Complex z = rng.unit_box();
      const std::size_t mult = 1 + rng.next_u64() % 3;
      for (std::size_t j = 0; j < mult; ++j) nodes.push_back(z);
    }
    // Shuffle so that repeats are not adjacent in the caller's order.
    for (std::size_t k = nodes.size(); k > 1; --k) std::swap(nodes[k - 1], nodes[rng.next_u64() % k]);
    const NodeSet ns(nodes);
    const auto p = divided_differences(f, ns);
    for (const Complex z : ns.distinct()) {
      const std::size_t mult = ns.multiplicity(z);
      const auto derivs = newton_eval_derivatives(p, z, mult - 1);
      for (std::size_t j = 0; j < mult; ++j) CHECK(std::abs(derivs[j] - std::exp(z)) < 1e-9);
    }
  }
}

TEST_CASE("permutation invariance of the leading coefficient") {
  const auto f = AnalyticFunction::exponential();
  Rng rng(2002);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 2 + rng.next_u64() % 5;
    std::vector<Complex> nodes(m);
    for (auto& z : nodes) z = rng.unit_box();
    const Complex lead = divided_differences(f, NodeSet(nodes)).coeffs.back();
    std::sort(nodes.begin(), nodes.end(), [](Complex a, Complex b) { return a.imag() < b.imag(); });
    do {
      CHECK(std::abs(divided_differences(f, NodeSet(nodes)).coeffs.back() - lead) <= 1e-10);
    } while (std::next_permutation(nodes.begin(), nodes.end(),
                                   [](Complex a, Complex b) { return a.imag() < b.imag(); }));
  }
}

TEST_CASE("oracle equivalence") {
  const auto f = AnalyticFunction::exponential();
  Rng rng(3003);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t m = 1 + trial % 4;
    std::vector<Complex> nodes(m);
    for (auto& z : nodes) z = random_in_disc(rng);
    if (trial % 3 == 0) nodes.back() = nodes.front();
    const Complex lead = divided_differences(f, NodeSet(nodes)).coeffs.back();
    CHECK(std::abs(lead - dd_integral_oracle(f, nodes)) <= 1e-6);
  }
}

TEST_CASE("polynomial exactness") {
  Rng rng(4004);
  const auto cubic = AnalyticFunction::polynomial({Complex{1.0, -1.0}, 0.5, Complex{0.0, 2.0}, -0.25});
  std::vector<Complex> nodes(5);
  for (auto& z : nodes) z = rng.unit_box();
  const auto p = divided_differences(cubic, NodeSet(nodes));
  CHECK(std::abs(p.coeffs.back()) < 1e-12);
  for (int k = 0; k < 50; ++k) {
    const Complex z = 2.0 * rng.unit_box();
    const Complex fz = cubic.scalar_eval(z);
    CHECK(std::abs(newton_eval_scalar(p, z) - fz) <= 1e-10 * std::max(1.0, std::abs(fz)));
  }
  const std::vector<Complex> d{0.5, Complex{0.0, -1.0}, 1.5};
  const ComplexMatrix a = ComplexMatrix::diagonal(d);
  CHECK(spectral_norm(newton_eval_matrix(p, a) - cubic.matrix_derivative(0, a)) < 1e-10);
}

TEST_CASE("remainder identity") {
  const auto f = AnalyticFunction::exponential();
  Rng rng(5005);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 1 + trial % 6;
    std::vector<Complex> nodes(m);
    for (auto& z : nodes) z = rng.unit_box();
    const NodeSet ns(nodes);
    const auto p = divided_differences(f, ns);
    const Complex z = 1.5 * rng.unit_box();
    std::vector<Complex> ext = nodes;
    ext.push_back(z);
    const Complex lhs = std::exp(z) - newton_eval_scalar(p, z);
    const Complex rhs = omega_at_scalar(ns, z) * divided_difference(f, ext);
    CHECK(std::abs(lhs - rhs) <= 1e-9);
  }
}

TEST_CASE("node parser") {
  constexpr double pi = std::numbers::pi;
  CHECK(parse_complex("0.5") == Complex{0.5});
  CHECK(std::abs(parse_complex("-1+3pi/4j") - Complex{-1.0, 3.0 * pi / 4.0}) < 1e-15);
  CHECK(std::abs(parse_complex("-pij") - Complex{0.0, -pi}) < 1e-15);
  CHECK(parse_complex("2*(1+j)") == Complex{2.0, 2.0});
  CHECK(parse_complex("1e-3i") == Complex{0.0, 1e-3});
  CHECK_THROWS_AS(parse_complex("1+"), FormatError);
  CHECK_THROWS_AS(parse_complex("abc"), FormatError);

  const NodeSet list = parse_node_list("0, pij, -pij, pi/2j, -pi/2j, 3pi/4j, -3pi/4j, -1, -1+pij, -1-pij, "
                                       "-1+pi/2j, -1-pi/2j, -1+3pi/4j, -1-3pi/4j, -0.5+pij, -0.5-pij");
  const NodeSet ref = paper_nodes();
  REQUIRE(list.size() == ref.size());
  for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(list[k] - ref[k]) < 1e-15);

  std::istringstream file("# nodes\n1 0\n\n0 -2.5  # trailing\n");
  const NodeSet fromfile = read_node_file(file);
  CHECK(fromfile.size() == 2);
  CHECK(fromfile[1] == Complex{0.0, -2.5});
  std::istringstream bad("1\n");
  CHECK_THROWS_AS(read_node_file(bad), FormatError);
}
