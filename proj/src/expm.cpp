#include "mfbound/expm.hpp"

#include <array>
#include <cmath>

#include "mfbound/decomp.hpp"
#include "mfbound/error.hpp"
#include "mfbound/norms.hpp"

namespace mfbound {

namespace {

// Largest ||A|| for which the degree-m approximant meets unit roundoff
// in backward error.
constexpr std::array<std::pair<int, double>, 4> kLowDegree{{
    {3, 1.495585217958292e-2},
    {5, 2.539398330063230e-1},
    {7, 9.504178996162932e-1},
    {9, 2.097847961257068e0},
}};
constexpr double kTheta13 = 5.371920351148152e0;

constexpr std::array<double, 14> kB13{
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

std::vector<double> pade_coefficients(int m) {
  switch (m) {
    case 3: return {120.0, 60.0, 12.0, 1.0};
    case 5: return {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
    case 7: return {17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0};
    case 9:
      return {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
              2162160.0,     110880.0,     3960.0,       90.0,        1.0};
    default: throw InvalidArgument("pade_coefficients: unsupported degree");
  }
}

// Accumulates sum_k c_k M_k.
ComplexMatrix combine(std::initializer_list<std::pair<double, const ComplexMatrix*>> terms) {
  const ComplexMatrix& first = *terms.begin()->second;
  ComplexMatrix r(first.rows(), first.cols());
  for (const auto& [c, m] : terms) {
    auto rd = r.data();
    auto md = m->data();
    for (std::size_t k = 0; k < rd.size(); ++k) rd[k] += c * md[k];
  }
  return r;
}

ComplexMatrix pade_ratio(const ComplexMatrix& u, const ComplexMatrix& v) {
  return solve(v - u, v + u);
}

ComplexMatrix pade_low(const ComplexMatrix& a, int m) {
  const auto b = pade_coefficients(m);
  const std::size_t n = a.rows();
  const ComplexMatrix id = identity(n);
  const ComplexMatrix a2 = a * a;
  // Even powers A^0, A^2, ..., A^(m-1)
  std::vector<ComplexMatrix> pow{id, a2};
  for (int k = 4; k < m; k += 2) pow.push_back(pow.back() * a2);
  ComplexMatrix uo(n, n);
  ComplexMatrix v(n, n);
  for (std::size_t k = 0; k < pow.size(); ++k) {
    const auto pd = pow[k].data();
    auto ud = uo.data();
    auto vd = v.data();
    for (std::size_t e = 0; e < pd.size(); ++e) {
      ud[e] += b[2 * k + 1] * pd[e];
      vd[e] += b[2 * k] * pd[e];
    }
  }
  return pade_ratio(a * uo, v);
}

ComplexMatrix pade13(const ComplexMatrix& a) {
  const auto& b = kB13;
  const ComplexMatrix id = identity(a.rows());
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const ComplexMatrix u_hi = combine({{b[13], &a6}, {b[11], &a4}, {b[9], &a2}});
  const ComplexMatrix u_lo = combine({{b[7], &a6}, {b[5], &a4}, {b[3], &a2}, {b[1], &id}});
  const ComplexMatrix u = a * (a6 * u_hi + u_lo);
  const ComplexMatrix v_hi = combine({{b[12], &a6}, {b[10], &a4}, {b[8], &a2}});
  const ComplexMatrix v_lo = combine({{b[6], &a6}, {b[4], &a4}, {b[2], &a2}, {b[0], &id}});
  const ComplexMatrix v = a6 * v_hi + v_lo;
  return pade_ratio(u, v);
}

double norm_for_scaling(const ComplexMatrix& a) {
  try {
    return spectral_norm(a);
  } catch (const NonConvergence&) {
    return frobenius_norm(a);  // upper bound on the spectral norm
  }
}

}  // namespace

ExpmResult matrix_exp_detailed(const ComplexMatrix& a) {
  require_square(a, "matrix_exp");
  if (!a.all_finite()) throw Overflow("matrix_exp: non-finite input");
  const double norm = norm_for_scaling(a);
  if (norm == 0.0) return {identity(a.rows()), 0, 0};

  for (const auto& [m, theta] : kLowDegree) {
    if (norm <= theta) return {pade_low(a, m), m, 0};
  }
  int s = 0;
  if (norm > kTheta13) s = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  if (s > 1000) throw Overflow("matrix_exp: norm too large");
  ComplexMatrix r = pade13(s > 0 ? scalar_mul(std::ldexp(1.0, -s), a) : a);
  for (int k = 0; k < s; ++k) r = r * r;
  return {std::move(r), 13, s};
}

ComplexMatrix matrix_exp(const ComplexMatrix& a) { return matrix_exp_detailed(a).value; }

}  // namespace mfbound
