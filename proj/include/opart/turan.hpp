#pragma once

// Ratio u_alpha(n), the s+/s- expansions, power-quotient and pbar-power
// bounds, bound functions for u_alpha(n) and u_alpha(n+1) with their starred
// refinements, the M1/M2 polynomials, the reverse higher order Turan check and
// Jensen cubic classification.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "opart/certified_arith.hpp"
#include "opart/constants.hpp"
#include "opart/difference_bounds.hpp"
#include "opart/errors.hpp"
#include "opart/half_power_poly.hpp"
#include "opart/overpartition.hpp"

namespace opart {

struct RatioU {
  std::size_t n = 0;
  Rational alpha;
  CertInterval u;
};

/// u_alpha(n) = r(n-1) r(n+1) / r(n)^2, via exp of the second difference.
inline RatioU u_alpha(const OverpartitionTable& t, std::size_t n, const Rational& alpha, Precision bits) {
  if (n < 2) throw DomainError("u_alpha needs n >= 2");
  return {n, alpha, exp(signed_diff_log(t, n - 1, 2, alpha, bits).value)};
}

/// sum_j num[j] pi^{2j} / (den pi^p).
inline CertInterval pi_ratio(std::initializer_list<long> num, long den, int p, Precision bits) {
  CertInterval pi = CertInterval::pi(bits);
  CertInterval pi2 = square(pi);
  CertInterval acc = CertInterval::exact(0L, bits);
  CertInterval pw = CertInterval::exact(1L, bits);
  for (long c : num) {
    acc += pw * c;
    pw = pw * pi2;
  }
  CertInterval d = CertInterval::exact(den, bits);
  if (p > 0) d = d * pow_int(pi, p);
  if (p < 0) d = d / pow_int(pi, -p);
  return acc / d;
}

/// Which b6 to use in the s- expansion: the value that matches the
/// asymptotic expansion, or the value as typeset in the source display.
enum class B6Variant { Corrected, AsPrinted };

/// a_0..a_9 of s+(n) = sum a_i n^{-i/2}.
inline std::array<CertInterval, 10> s_plus_coefficients(Precision bits) {
  return {CertInterval::exact(1L, bits),
          CertInterval::exact(0L, bits),
          CertInterval::exact(0L, bits),
          pi_ratio({0, 1}, 2, 1, bits),
          CertInterval::exact(-1L, bits),
          pi_ratio({4, -5}, 8, 1, bits),
          pi_ratio({4, 12, 1}, 8, 2, bits),
          pi_ratio({8, -14, 3}, 16, 3, bits),
          pi_ratio({24, -48, -52, -15}, 48, 4, bits),
          pi_ratio({192, -432, 360, 249, 8}, 384, 5, bits)};
}

/// b_0..b_9 of s-(n).
inline std::array<CertInterval, 10> s_minus_coefficients(Precision bits, B6Variant v = B6Variant::Corrected) {
  CertInterval b6 = v == B6Variant::Corrected ? pi_ratio({-4, 12, 1}, 8, 2, bits) : -pi_ratio({4, 12, 1}, 8, 2, bits);
  return {CertInterval::exact(1L, bits),
          CertInterval::exact(0L, bits),
          CertInterval::exact(0L, bits),
          -pi_ratio({0, 1}, 2, 1, bits),
          CertInterval::exact(1L, bits),
          -pi_ratio({4, 5}, 8, 1, bits),
          b6,
          -pi_ratio({8, 14, 19}, 16, 3, bits),
          -pi_ratio({24, 48, -124, -15}, 48, 4, bits),
          -pi_ratio({192, 432, 552, 807, 8}, 384, 5, bits)};
}

inline HalfPowerPoly half_power_series(const std::array<CertInterval, 10>& c, const std::string& tag) {
  HalfPowerPoly p;
  for (int i = 0; i < 10; ++i) p.add(Rational(i, 2), c[i], 0, tag + std::to_string(i));
  return p;
}

enum class Side { Plus, Minus };

/// s+(n) - 120/n^5 < (pbar(n+1)/pbar(n))^{1/(n+1)} < s+(n) + 850/n^5, and
/// s-(n) - 110/n^5 < (pbar(n-1)/pbar(n))^{1/(n-1)} < s-(n) + 200/n^5.
inline BoundCheck s_bounds_check(const OverpartitionTable& t, std::size_t n, Side side,
                                 B6Variant variant = B6Variant::Corrected) {
  if (side == Side::Plus && n < 1) throw DomainError("s+ check needs n >= 1");
  if (side == Side::Minus && n < 2) throw DomainError("s- check needs n >= 2");
  return refine([&](Precision bits) {
    BoundCheck c;
    c.n = n;
    c.bits = bits;
    CertInterval nn = CertInterval::exact(long(n), bits);
    CertInterval inv5 = pow_int(nn, -5);
    HalfPowerPoly s;
    long lo_m, hi_m;
    std::size_t other, root;
    if (side == Side::Plus) {
      s = half_power_series(s_plus_coefficients(bits), "a");
      lo_m = 120, hi_m = 850, other = n + 1, root = n + 1;
    } else {
      s = half_power_series(s_minus_coefficients(bits, variant), "b");
      lo_m = 110, hi_m = 200, other = n - 1, root = n - 1;
    }
    CertInterval sv = s.evaluate(nn);
    c.value = pow(CertInterval::exact(make_rational(t.at(other), t.at(n)), bits),
                  make_rational(1, BigInt(static_cast<unsigned long>(root))));
    c.bound_lo = sv - inv5 * lo_m;
    c.bound_hi = sv + inv5 * hi_m;
    c.verdict = all_of({certify_less(c.bound_lo, c.value), certify_less(c.value, c.bound_hi)});
    return c;
  });
}

/// 1 + (3a - 2a log n)/n^3 - 2^{7a+14} log n/n^5 < n^{2a/n} / ((n-1)^{a/(n-1)} (n+1)^{a/(n+1)})
///   < 1 + (3a - 2a log n)/n^3 + 2^{18a+31}/n^5.
inline BoundCheck power_quotient_check(std::size_t n, const Rational& alpha,
                                       HypothesisPolicy policy = HypothesisPolicy::Enforce) {
  if (n < 2) throw DomainError("power quotient needs n >= 2");
  bool in_cutoff = at_or_above(long(n), ntilde(alpha));
  if (!in_cutoff && policy == HypothesisPolicy::Enforce)
    throw HypothesisError("the power quotient bounds are claimed for n >= Ntilde(alpha)");
  return refine([&](Precision bits) {
    BoundCheck c;
    c.n = n;
    c.bits = bits;
    c.in_cutoff = in_cutoff;
    CertInterval a = CertInterval::exact(alpha, bits);
    auto ll = [&](std::size_t m) {
      CertInterval mm = CertInterval::exact(long(m), bits);
      return log(mm) / mm;
    };
    c.value = exp(a * (ll(n) * 2L - ll(n - 1) - ll(n + 1)));
    CertInterval nn = CertInterval::exact(long(n), bits);
    CertInterval ln = log(nn);
    CertInterval mid = 1L + (a * 3L - a * 2L * ln) / pow_int(nn, 3);
    c.bound_lo = mid - pow2(7 * alpha + 14, bits) * ln / pow_int(nn, 5);
    c.bound_hi = mid + pow2(18 * alpha + 31, bits) / pow_int(nn, 5);
    c.verdict = all_of({certify_less(c.bound_lo, c.value), certify_less(c.value, c.bound_hi)});
    return c;
  });
}

/// L+(n) < pbar(n)^{2/(n(n-1)(n+1))} < U+(n).
inline BoundCheck pbar_power_check(const OverpartitionTable& t, std::size_t n) {
  if (n < 2) throw DomainError("pbar power check needs n >= 2");
  return refine([&](Precision bits) {
    BoundCheck c;
    c.n = n;
    c.bits = bits;
    CertInterval nn = CertInterval::exact(long(n), bits);
    CertInterval pi = CertInterval::pi(bits);
    CertInterval ln = log(nn);
    CertInterval base = 1L + pi * 2L * pow(nn, Rational(-5, 2)) - log(nn * 8L) * 2L / pow_int(nn, 3) -
                        2L / (pi * pow(nn, Rational(7, 2))) - 1L / (square(pi) * pow_int(nn, 4)) +
                        pi_ratio({-2, 0, 6}, 3, 3, bits) * pow(nn, Rational(-9, 2));
    CertInterval inv5 = pow_int(nn, -5);
    c.bound_lo = base - ln * inv5 * 80L;
    c.bound_hi = base + inv5 * 140L;
    BigInt e = BigInt(static_cast<unsigned long>(n)) * (n - 1) * (n + 1);
    c.value = pow(CertInterval::exact(t.at(n), bits), make_rational(2, e));
    c.verdict = all_of({certify_less(c.bound_lo, c.value), certify_less(c.value, c.bound_hi)});
    return c;
  });
}

/// c_k^{[family]} = a + b log n, k = 0..4.
inline std::array<LogLinear, 5> c_coefficients(int family, const Rational& alpha, Precision bits) {
  if (family != 1 && family != 2) throw DomainError("coefficient family is 1 or 2");
  CertInterval zero = CertInterval::exact(0L, bits);
  CertInterval pi = CertInterval::pi(bits);
  CertInterval pi2 = square(pi);
  CertInterval log8 = CertInterval::log2(bits) * 3L;
  Rational a1 = alpha + 1;
  std::array<LogLinear, 5> c{LogLinear{zero, zero}, LogLinear{zero, zero}, LogLinear{zero, zero},
                             LogLinear{zero, zero}, LogLinear{zero, zero}};
  c[0] = {pi * 3L / 4L, zero};
  c[1] = {CertInterval::exact(Rational(3 * a1), bits) - log8 * 2L, CertInterval::exact(Rational(-2 * a1), bits)};
  if (family == 1) {
    c[2] = {-pi_ratio({15}, 4, 1, bits), zero};
    c[3] = {-3L / pi2, zero};
    c[4] = {pi_ratio({-16 * 35, 0, 3 * 35}, 192, 3, bits), zero};
  } else {
    c[2] = {-pi_ratio({30, 15}, 8, 1, bits), zero};
    c[3] = {(CertInterval::exact(Rational(-3), bits) - pi2 * CertInterval::exact(Rational(11 * a1), bits) +
             pi2 * log8 * 6L) / pi2,
            CertInterval::exact(Rational(6 * a1), bits)};
    c[4] = {pi_ratio({-16 * 35, 72 * 35, 21 * 35}, 192, 3, bits), zero};
  }
  return c;
}

inline CertInterval eval_loglinear(const LogLinear& c, const CertInterval& logn) { return c.a + c.b * logn; }

inline void add_loglinear(HalfPowerPoly& p, const Rational& exponent, const LogLinear& c, const std::string& tag) {
  p.add(exponent, c.a, 0, tag + ".a");
  if (!(c.b.is_point() && mpfr_zero_p(c.b.lo()))) p.add(exponent, c.b, 1, tag + ".b");
}

/// Bound functions for u(n) (U, L) and u(n+1) (U1, L1), their starred
/// refinements, all as data. The shared c-terms carry identical tags and
/// coefficient objects, so differences like U - U* cancel exactly.
struct TuranBoundPolys {
  Rational alpha;
  std::array<LogLinear, 5> c1, c2;
  HalfPowerPoly U, L, U1, L1;
  HalfPowerPoly Ustar, Lstar, U1star, L1star;
  /// X - 1 for the starred bounds (the constant 1 removed).
  HalfPowerPoly Ustar_excess, Lstar_excess, U1star_excess, L1star_excess;
};

inline TuranBoundPolys turan_bound_polys(const Rational& alpha, Precision bits) {
  TuranBoundPolys b;
  b.alpha = alpha;
  b.c1 = c_coefficients(1, alpha, bits);
  b.c2 = c_coefficients(2, alpha, bits);
  HalfPowerPoly one;
  one.add(0, CertInterval::exact(1L, bits), 0, "one");
  HalfPowerPoly s1, s2;
  for (int k = 0; k < 5; ++k) {
    add_loglinear(s1, Rational(5 + k, 2), b.c1[k], "c1." + std::to_string(k));
    add_loglinear(s2, Rational(5 + k, 2), b.c2[k], "c2." + std::to_string(k));
  }
  auto tail = [](const LogLinear& t, int sign, const std::string& tag) {
    HalfPowerPoly p;
    add_loglinear(p, 5, sign > 0 ? t : LogLinear{-t.a, -t.b}, tag);
    return p;
  };
  b.U = one + s1 + tail(tail_u(alpha, bits), +1, "tail.U");
  b.L = one + s1 + tail(tail_l(alpha, bits), -1, "tail.L");
  b.U1 = one + s2 + tail(tail_u1(alpha, bits), +1, "tail.U1");
  b.L1 = one + s2 + tail(tail_l1(alpha, bits), -1, "tail.L1");
  HalfPowerPoly plus_q, minus_q;
  plus_q.add(Rational(19, 4), CertInterval::exact(1L, bits), 0, "star");
  minus_q.add(Rational(19, 4), CertInterval::exact(-1L, bits), 0, "star");
  b.Ustar_excess = s1 + plus_q;
  b.Lstar_excess = s1 + minus_q;
  b.U1star_excess = s2 + plus_q;
  b.L1star_excess = s2 + minus_q;
  b.Ustar = one + b.Ustar_excess;
  b.Lstar = one + b.Lstar_excess;
  b.U1star = one + b.U1star_excess;
  b.L1star = one + b.L1star_excess;
  return b;
}

struct Theorem35Check {
  std::size_t n = 0;
  Rational alpha;
  CertInterval u_n, u_n1;
  CertInterval L, U, L1, U1;
  Verdict lower = Verdict::Undetermined, upper = Verdict::Undetermined;
  Verdict lower1 = Verdict::Undetermined, upper1 = Verdict::Undetermined;
  Verdict verdict = Verdict::Undetermined;
  bool in_cutoff = true;
  Precision bits = kStartBits;
  bool undetermined() const { return verdict == Verdict::Undetermined; }
};

/// L < u(n) < U and L1 < u(n+1) < U1.
inline Theorem35Check theorem35_check(const OverpartitionTable& t, std::size_t n, const Rational& alpha,
                                      HypothesisPolicy policy = HypothesisPolicy::Enforce) {
  if (n < 2) throw DomainError("u bounds need n >= 2");
  bool in_cutoff = at_or_above(long(n), ntilde(alpha));
  if (!in_cutoff && policy == HypothesisPolicy::Enforce)
    throw HypothesisError("the u bounds are claimed for n >= Ntilde(alpha)");
  t.at(n + 2);
  return refine([&](Precision bits) {
    Theorem35Check c;
    c.n = n;
    c.alpha = alpha;
    c.bits = bits;
    c.in_cutoff = in_cutoff;
    TuranBoundPolys b = turan_bound_polys(alpha, bits);
    CertInterval nn = CertInterval::exact(long(n), bits);
    c.u_n = u_alpha(t, n, alpha, bits).u;
    c.u_n1 = u_alpha(t, n + 1, alpha, bits).u;
    c.L = b.L.evaluate(nn);
    c.U = b.U.evaluate(nn);
    c.L1 = b.L1.evaluate(nn);
    c.U1 = b.U1.evaluate(nn);
    c.lower = certify_less(c.L, c.u_n);
    c.upper = certify_less(c.u_n, c.U);
    c.lower1 = certify_less(c.L1, c.u_n1);
    c.upper1 = certify_less(c.u_n1, c.U1);
    c.verdict = all_of({c.lower, c.upper, c.lower1, c.upper1});
    return c;
  });
}

/// Starred bounds at n given as a cutoff value (integer or exp-form). The
/// values are returned scaled: n^{5/2} (X - 1), computed from log n only.
struct StarredBounds {
  CertInterval log_n;
  CertInterval Ustar, Lstar, U1star, L1star;
};

/// sum coeff n^{-(e - shift)} (log n)^p with n = e^L.
inline CertInterval evaluate_from_log(const HalfPowerPoly& p, const CertInterval& L, const Rational& shift) {
  Precision bits = L.bits();
  CertInterval sum = CertInterval::exact(0L, bits);
  for (const auto& t : p.terms()) {
    CertInterval v = t.coeff * exp(-(CertInterval::exact(Rational(t.exponent - shift), bits) * L));
    if (t.log_power) v = v * pow_int(L, t.log_power);
    sum += v;
  }
  return sum;
}

inline StarredBounds starred_bounds(const CutoffValue& n, const Rational& alpha, Precision bits) {
  TuranBoundPolys b = turan_bound_polys(alpha, bits);
  StarredBounds s;
  s.log_n = n.log_value(bits);
  Rational shift(5, 2);
  s.Ustar = evaluate_from_log(b.Ustar_excess, s.log_n, shift);
  s.Lstar = evaluate_from_log(b.Lstar_excess, s.log_n, shift);
  s.U1star = evaluate_from_log(b.U1star_excess, s.log_n, shift);
  s.L1star = evaluate_from_log(b.L1star_excess, s.log_n, shift);
  return s;
}

struct RefinementCheck {
  CertInterval log_n;
  Verdict U_below_Ustar = Verdict::Undetermined;
  Verdict L_above_Lstar = Verdict::Undetermined;
  Verdict U1_below_U1star = Verdict::Undetermined;
  Verdict L1_above_L1star = Verdict::Undetermined;
};

/// U < U*, L > L*, U1 < U1*, L1 > L1* at n, decided in log-domain after exact
/// cancellation of the shared terms.
inline RefinementCheck refinement_check(const CutoffValue& n, const Rational& alpha) {
  RefinementCheck r;
  auto one = [&](const HalfPowerPoly& smaller_minus_larger_sign_less, Precision bits) {
    return to_verdict(smaller_minus_larger_sign_less.sign_log_domain(n.log_value(bits)), Tri::Less);
  };
  r.U_below_Ustar = refine([&](Precision bits) {
    TuranBoundPolys b = turan_bound_polys(alpha, bits);
    return one(b.U - b.Ustar, bits);
  });
  r.L_above_Lstar = refine([&](Precision bits) {
    TuranBoundPolys b = turan_bound_polys(alpha, bits);
    return one(b.Lstar - b.L, bits);
  });
  r.U1_below_U1star = refine([&](Precision bits) {
    TuranBoundPolys b = turan_bound_polys(alpha, bits);
    return one(b.U1 - b.U1star, bits);
  });
  r.L1_above_L1star = refine([&](Precision bits) {
    TuranBoundPolys b = turan_bound_polys(alpha, bits);
    return one(b.L1star - b.L1, bits);
  });
  r.log_n = n.log_value(kStartBits);
  return r;
}

struct ErrorTermAudit {
  std::string name;
  CertInterval value;
  unsigned count = 0;   // products or terms summed
  CertInterval bound;   // the displayed majorant at n
  Verdict verdict = Verdict::Undetermined;  // |value| <= bound
};

struct MPolynomials {
  BigInt n;
  Rational alpha;
  std::array<CertInterval, 5> c1, c2;
  std::array<CertInterval, 10> d;
  CertInterval M1, M2, M21;
  CertInterval identity_residual;  // M2 - 4 M1 - 225 pi^2 / (64 n^7)
  /// max_k |c_k| < n^{1/16}, the growth premise behind the displayed majorants.
  Verdict coefficient_premise = Verdict::Undetermined;
  std::vector<ErrorTermAudit> errors;
  /// Each expansion minus its decomposition; all should enclose 0.
  CertInterval expansion_upper, expansion_lower, expansion_square;
};

inline MPolynomials m_polynomials(const BigInt& n, const Rational& alpha, Precision bits) {
  if (n < 2) throw DomainError("M polynomials need n >= 2");
  MPolynomials m;
  m.n = n;
  m.alpha = alpha;
  CertInterval nn = CertInterval::exact(n, bits);
  CertInterval logn = log(nn);
  CertInterval isq = 1L / sqrt(nn);  // n^{-1/2}
  auto c1 = c_coefficients(1, alpha, bits);
  auto c2 = c_coefficients(2, alpha, bits);
  for (int k = 0; k < 5; ++k) {
    m.c1[k] = eval_loglinear(c1[k], logn);
    m.c2[k] = eval_loglinear(c2[k], logn);
  }
  for (int k = 0; k < 5; ++k) m.d[k] = m.c1[k] + m.c2[k];
  for (int k = 5; k < 10; ++k) {
    CertInterval s = CertInterval::exact(0L, bits);
    for (int j = 5; j <= k; ++j) s += m.c1[j - 5] * m.c2[k - j];
    m.d[k] = s;
  }
  std::array<CertInterval, 20> ip;  // n^{-k/2}
  ip[0] = CertInterval::exact(1L, bits);
  for (int k = 1; k < 20; ++k) ip[k] = ip[k - 1] * isq;
  auto npow = [&](const Rational& e) { return pow(nn, -e); };
  CertInterval zero = CertInterval::exact(0L, bits);

  CertInterval m1 = zero, m2 = zero;
  for (int k = 0; k <= 4; ++k) {
    CertInterval a = zero, b = zero;
    for (int j = 0; j <= k; ++j) {
      a += m.c1[j] * m.c2[k - j];
      b += m.d[j] * m.d[k - j];
    }
    m1 += a * ip[k];
    m2 += b * ip[k];
  }
  CertInterval inv5 = npow(5);
  m.M1 = m1 * inv5;
  m.M2 = m2 * inv5;
  CertInterval pi = CertInterval::pi(bits);
  m.identity_residual = m.M2 - m.M1 * 4L - square(pi) * 225L / (pow_int(nn, 7) * 64L);

  CertInterval root16 = pow(nn, Rational(1, 16));
  Verdict prem = Verdict::Holds;
  for (int k = 0; k < 5; ++k)
    prem = all_of({prem, certify_less(abs(m.c1[k]), root16), certify_less(abs(m.c2[k]), root16)});
  m.coefficient_premise = prem;

  auto audit = [&](std::string name, CertInterval value, unsigned count, CertInterval bound) {
    ErrorTermAudit a{std::move(name), value, count, bound, Verdict::Undetermined};
    Verdict v = certify_less(abs(value), bound);
    a.verdict = v;
    m.errors.push_back(std::move(a));
  };

  CertInterval e11 = zero;
  unsigned n11 = 0;
  for (int k = 0; k <= 3; ++k)
    for (int j = k; j <= 3; ++j, ++n11) e11 += m.c1[j + 1] * m.c2[4 + k - j] * ip[k];
  e11 = e11 * npow(Rational(15, 2));
  audit("E1[1]", e11, n11, npow(Rational(29, 4)) * 10L);

  CertInterval e12 = zero;
  for (int k = 0; k <= 4; ++k) e12 += (m.c1[k] + m.c2[k]) * ip[k];
  e12 = e12 * npow(Rational(29, 4));
  audit("E1[2]", e12, 10, npow(Rational(57, 8)) * 10L);

  CertInterval e21 = zero;
  unsigned n21 = 0;
  for (int k = 5; k <= 9; ++k) {
    CertInterval a = zero;
    for (int j = 0; j <= k; ++j, ++n21) a += m.d[j] * m.d[k - j];
    e21 += a * ip[k];
  }
  e21 = e21 * inv5;
  // 25 n^{1/4} per product, n^{-k/2} <= n^{-5/2}
  audit("E2[1]", e21, n21, npow(Rational(29, 4)) * long(25 * n21));

  CertInterval e22 = zero;
  unsigned n22 = 0;
  for (int k = 0; k <= 8; ++k)
    for (int j = k; j <= 8; ++j, ++n22) e22 += m.d[j + 1] * m.d[9 + k - j] * ip[k];
  e22 = e22 * npow(10);
  audit("E2[2]", e22, n22, npow(Rational(39, 4)) * long(25 * n22));

  CertInterval e23 = zero;
  for (int k = 0; k <= 9; ++k) e23 += m.d[k] * ip[k];
  e23 = e23 * npow(Rational(29, 4)) * 6L;
  audit("E2[3]", e23, 10, npow(Rational(57, 8)) * 300L);

  // expansions, with X - 1 built from the same c-values
  CertInterval s1 = zero, s2 = zero;
  for (int k = 0; k < 5; ++k) {
    s1 += m.c1[k] * ip[k];
    s2 += m.c2[k] * ip[k];
  }
  CertInterval q = npow(Rational(19, 4));
  CertInterval x1 = s1 * npow(Rational(5, 2)), x2 = s2 * npow(Rational(5, 2));
  CertInterval up = (x1 + q) * (x2 + q);
  m.expansion_upper = up - (m.M1 + e11 + e12 + npow(Rational(19, 2)));
  CertInterval low = (x1 - q) + (x2 - q) + (x1 - q) * (x2 - q);
  CertInterval m21 = zero;
  for (int k = 0; k <= 9; ++k) m21 += m.d[k] * ip[k];
  m.M21 = m21 * npow(Rational(5, 2));
  m.expansion_lower = low - (m.M21 + e11 - e12 - q * 2L + npow(Rational(19, 2)));
  m.expansion_square = square(m.M21 - q * 3L) - (m.M2 + e21 + e22 - e23 + npow(Rational(19, 2)) * 9L);
  return m;
}

enum class CubicClass { OneRealTwoComplex, ThreeReal, Degenerate, Undetermined };

inline const char* to_string(CubicClass c) {
  switch (c) {
    case CubicClass::OneRealTwoComplex: return "OneRealTwoComplex";
    case CubicClass::ThreeReal: return "ThreeReal";
    case CubicClass::Degenerate: return "Degenerate";
    default: return "Undetermined";
  }
}

/// 3A1^2 A2^2 - 4 A1^3 a3 - 4 a0 A2^3 + 6 a0 A1 A2 a3 - a0^2 a3^2 for consecutive
/// terms a0, A1, A2, a3. This is the Turan expression and 1/27 of the
/// discriminant of a0 + 3 A1 x + 3 A2 x^2 + a3 x^3.
inline CertInterval turan_form(const CertInterval& a0, const CertInterval& a1, const CertInterval& a2,
                               const CertInterval& a3) {
  return square(a1) * square(a2) * 3L - pow_int(a1, 3) * a3 * 4L - a0 * pow_int(a2, 3) * 4L +
         a0 * a1 * a2 * a3 * 6L - square(a0) * square(a3);
}

/// Discriminant of sum_j binom(3,j) r(n-1+j) x^j from the standard formula.
inline CertInterval jensen_discriminant(const OverpartitionTable& t, std::size_t n, const Rational& alpha,
                                        Precision bits) {
  if (n < 2) throw DomainError("Jensen cubic needs n >= 2");
  t.at(n + 2);
  CertInterval a = r_alpha_value(t, n - 1, alpha, bits).value;
  CertInterval b = r_alpha_value(t, n, alpha, bits).value * 3L;
  CertInterval c = r_alpha_value(t, n + 1, alpha, bits).value * 3L;
  CertInterval d = r_alpha_value(t, n + 2, alpha, bits).value;
  // cubic d x^3 + c x^2 + b x + a
  return d * c * b * a * 18L - pow_int(c, 3) * a * 4L + square(c) * square(b) - d * pow_int(b, 3) * 4L -
         square(d) * square(a) * 27L;
}

inline CubicClass jensen_cubic_classify(const OverpartitionTable& t, std::size_t n, const Rational& alpha) {
  Tri s = refine([&](Precision bits) {
    return tri_compare(jensen_discriminant(t, n, alpha, bits), CertInterval::exact(0L, bits));
  });
  if (s == Tri::Less) return CubicClass::OneRealTwoComplex;
  if (s == Tri::Greater) return CubicClass::ThreeReal;
  return CubicClass::Degenerate;
}

struct TuranReport {
  std::size_t n = 0;
  Rational alpha;
  CertInterval u_n, u_n1;
  CertInterval lhs;  // 4(1-u(n))(1-u(n+1))
  CertInterval rhs;  // (1-u(n)u(n+1))^2
  Verdict verdict = Verdict::Undetermined;
  Verdict r_form_verdict = Verdict::Undetermined;  // Turan expression in r-values < 0
  bool forms_agree = false;
  bool amgm_applies = false;  // u(n) > 1 and u(n+1) > 1 certified
  CubicClass cubic_class = CubicClass::Undetermined;
  bool in_cutoff = false;
  Precision bits = kStartBits;
  bool undetermined() const {
    return verdict == Verdict::Undetermined || r_form_verdict == Verdict::Undetermined;
  }
};

/// `cutoff` is N_T(alpha); computed when not supplied.
inline TuranReport reverse_turan_check(const OverpartitionTable& t, std::size_t n, const Rational& alpha,
                                       std::optional<CutoffValue> cutoff = std::nullopt) {
  if (n < 2) throw DomainError("reverse Turan check needs n >= 2");
  t.at(n + 2);
  if (!cutoff) cutoff = turan_cutoff_set(alpha).N_T;
  bool in_cutoff = at_or_above(long(n), *cutoff);
  TuranReport rep = refine([&](Precision bits) {
    TuranReport r;
    r.n = n;
    r.alpha = alpha;
    r.bits = bits;
    r.in_cutoff = in_cutoff;
    r.u_n = u_alpha(t, n, alpha, bits).u;
    r.u_n1 = u_alpha(t, n + 1, alpha, bits).u;
    r.lhs = (1L - r.u_n) * (1L - r.u_n1) * 4L;
    r.rhs = square(1L - r.u_n * r.u_n1);
    r.verdict = certify_less(r.lhs, r.rhs);
    CertInterval a0 = r_alpha_value(t, n - 1, alpha, bits).value;
    CertInterval a1 = r_alpha_value(t, n, alpha, bits).value;
    CertInterval a2 = r_alpha_value(t, n + 1, alpha, bits).value;
    CertInterval a3 = r_alpha_value(t, n + 2, alpha, bits).value;
    r.r_form_verdict = certify_less(turan_form(a0, a1, a2, a3), CertInterval::exact(0L, bits));
    CertInterval one = CertInterval::exact(1L, bits);
    r.amgm_applies = certify_less(one, r.u_n) == Verdict::Holds && certify_less(one, r.u_n1) == Verdict::Holds;
    return r;
  });
  rep.forms_agree = rep.verdict == rep.r_form_verdict;
  rep.cubic_class = jensen_cubic_classify(t, n, alpha);
  return rep;
}

/// max{ceil(e^{a/b}), ceil((2b)^{19})} for exponent 1/4, ceil((2b)^{227}) for 1/16.
inline CutoffValue log_linear_cutoff(const Rational& a, const Rational& b, const Rational& exponent) {
  unsigned long p;
  if (exponent == Rational(1, 4)) p = 19;
  else if (exponent == Rational(1, 16)) p = 227;
  else throw DomainError("exponent must be 1/4 or 1/16");
  Rational ab = a / b;
  CutoffValue e = ceil_exp([ab](Precision bits) { return CertInterval::exact(ab, bits); });
  return cutoff_max(e, ceil_power(2 * b, p, 1));
}

/// a + b log n < n^{exponent}, decided from log n.
inline Verdict log_linear_vs_root_check(const Rational& a, const Rational& b, const CutoffValue& n,
                                        const Rational& exponent) {
  if (b <= 1) throw DomainError("b must exceed 1");
  if (exponent != Rational(1, 4) && exponent != Rational(1, 16)) throw DomainError("exponent must be 1/4 or 1/16");
  return refine([&](Precision bits) {
    CertInterval L = n.log_value(bits);
    CertInterval lhs = CertInterval::exact(a, bits) + CertInterval::exact(b, bits) * L;
    CertInterval rhs_log = CertInterval::exact(exponent, bits) * L;
    if (lhs.is_negative()) return Verdict::Holds;
    if (!lhs.is_positive()) return Verdict::Undetermined;
    return certify_less(log(lhs), rhs_log);
  });
}

}  // namespace opart
