#include "dpp/airy.hpp"

#include <cmath>
#include <numbers>

namespace dpp {

namespace {

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
struct DD {
  double hi = 0.0, lo = 0.0;
};

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  DD r = two_sum(s.hi, s.lo);
  return r;
}

DD dd_mul(DD a, DD b) {
  const double p = a.hi * b.hi;
  double e = std::fma(a.hi, b.hi, -p);
  e += a.hi * b.lo + a.lo * b.hi;
  DD r = two_sum(p, e);
  return r;
}

DD dd_mul_d(DD a, double b) {
  const double p = a.hi * b;
  double e = std::fma(a.hi, b, -p);
  e += a.lo * b;
  DD r = two_sum(p, e);
  return r;
}

DD dd_div_d(DD a, double b) {
  const double q1 = a.hi / b;
  const double r1 = std::fma(-q1, b, a.hi) + a.lo;
  const double q2 = r1 / b;
  DD r = two_sum(q1, q2);
  return r;
}

// Ai(0) and -Ai'(0): 3^{-2/3}/Gamma(2/3) and 3^{-1/3}/Gamma(1/3).
constexpr double kC1Hi = 0.3550280538878172;
constexpr double kC1Lo = 2.05233632436212e-17;
constexpr double kC2Hi = 0.2588194037928068;
constexpr double kC2Lo = -2.522243111610832e-17;

struct AiryPair {
  double ai, aip;
};

// Maclaurin series of Ai = c1*F - c2*G and Ai' = c1*F' - c2*G', terms by
// recurrence in x^3, summed in double-double.
AiryPair airy_series(double x) {
  const DD x3 = dd_mul_d(dd_mul_d({x, 0.0}, x), x);

  // Terms at level k: F ~ x^{3k}, G ~ x^{3k+1}, G' ~ x^{3k}, F' ~ x^{3k-1}.
  DD f_term = {1.0, 0.0};
  DD g_term = {x, 0.0};
  DD gp_term = {1.0, 0.0};
  DD fp_term = {0.0, 0.0};

  DD F = f_term, G = g_term, Fp = fp_term, Gp = gp_term;
  for (int k = 0; k < 120; ++k) {
    const double tk = 3.0 * static_cast<double>(k);
    f_term = dd_div_d(dd_mul(f_term, x3), (tk + 2.0) * (tk + 3.0));
    g_term = dd_div_d(dd_mul(g_term, x3), (tk + 3.0) * (tk + 4.0));
    gp_term = dd_div_d(dd_mul(gp_term, x3), (tk + 1.0) * (tk + 3.0));
    if (k == 0) {
      fp_term = dd_div_d(dd_mul_d({x, 0.0}, x), 2.0);
    } else {
      fp_term = dd_div_d(dd_mul(fp_term, x3), tk * (tk + 2.0));
    }
    F = dd_add(F, f_term);
    G = dd_add(G, g_term);
    Fp = dd_add(Fp, fp_term);
    Gp = dd_add(Gp, gp_term);
    const double scale = std::abs(F.hi) + std::abs(G.hi) + 1.0;
    if (std::abs(f_term.hi) < 1e-22 * scale && std::abs(g_term.hi) < 1e-22 * scale) break;
  }

  const DD c1 = {kC1Hi, kC1Lo}, c2 = {kC2Hi, kC2Lo};
  const DD ai = dd_add(dd_mul(c1, F), dd_mul_d(dd_mul(c2, G), -1.0));
  const DD aip = dd_add(dd_mul(c1, Fp), dd_mul_d(dd_mul(c2, Gp), -1.0));
  return {ai.hi + ai.lo, aip.hi + aip.lo};
}

// Exponential asymptotic expansion for x >= 6 (DLMF 9.7.5-9.7.6), truncated
// at the smallest term.
AiryPair airy_asymptotic(double x) {
  const double zeta = (2.0 / 3.0) * x * std::sqrt(x);
  double u = 1.0, v = 1.0;
  double sum_u = 1.0, sum_v = 1.0;
  double prev = 1.0;
  double sign = -1.0;
  for (int k = 1; k <= 40; ++k) {
    const double kk = static_cast<double>(k);
    u *= (6.0 * kk - 5.0) * (6.0 * kk - 3.0) * (6.0 * kk - 1.0) /
         ((2.0 * kk - 1.0) * 216.0 * kk);
    const double term = u / std::pow(zeta, kk);
    if (std::abs(term) > prev) break;  // past optimal truncation
    v = u * (6.0 * kk + 1.0) / (1.0 - 6.0 * kk);
    sum_u += sign * term;
    sum_v += sign * v / std::pow(zeta, kk);
    prev = std::abs(term);
    if (prev < 1e-20) break;
    sign = -sign;
  }
  const double pref = std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi));
  const double x4 = std::pow(x, 0.25);
  return {pref / x4 * sum_u, -pref * x4 * sum_v};
}

}  // namespace

double airy_ai(double x) {
  return (x >= 6.0) ? airy_asymptotic(x).ai : airy_series(x).ai;
}

double airy_ai_prime(double x) {
  return (x >= 6.0) ? airy_asymptotic(x).aip : airy_series(x).aip;
}

}  // namespace dpp
