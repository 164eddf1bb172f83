#pragma once

// Forward differences of log r_alpha(n), the split into an explicit part H and
// a remainder part G, their bound functions, and the sandwich for
// (-1)^r Delta^r log r_alpha(n).

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include "opart/certified_arith.hpp"
#include "opart/constants.hpp"
#include "opart/errors.hpp"
#include "opart/overpartition.hpp"
#include "opart/zuckerman.hpp"

namespace opart {

inline Verdict to_verdict(Tri t, Tri want) {
  if (t == Tri::Undetermined) return Verdict::Undetermined;
  return t == want ? Verdict::Holds : Verdict::Fails;
}

/// sum_{i=0}^r (-1)^{r-i} binom(r,i) f(n+i).
inline CertInterval forward_difference(const std::function<CertInterval(std::size_t)>& f, unsigned r,
                                       std::size_t n) {
  CertInterval acc = f(n + r);
  for (unsigned i = 0; i < r; ++i) {
    CertInterval term = f(n + i) * binomial(r, i);
    if ((r - i) % 2 == 1) acc -= term;
    else acc += term;
  }
  return acc;
}

/// (-1)^r Delta^r f(n) = sum_i (-1)^i binom(r,i) f(n+i).
inline CertInterval signed_difference(const std::function<CertInterval(std::size_t)>& f, unsigned r,
                                      std::size_t n) {
  CertInterval d = forward_difference(f, r, n);
  return r % 2 == 1 ? -d : d;
}

struct DiffValue {
  std::size_t n = 0;
  unsigned r = 0;
  Rational alpha;
  CertInterval value;
};

inline DiffValue signed_diff_log(const OverpartitionTable& t, std::size_t n, unsigned r, const Rational& alpha,
                                 Precision bits) {
  if (n < 1) throw DomainError("signed_diff_log needs n >= 1");
  t.at(n + r);
  auto f = [&](std::size_t m) { return log_r_alpha(t, m, alpha, bits); };
  return {n, r, alpha, signed_difference(f, r, n)};
}

/// h(m) = mu/m - (alpha+1) log m / m + (log(mu-1) - log mu)/m - log 8/m, mu = pi sqrt(m).
inline CertInterval h_function(std::size_t m, const Rational& alpha, Precision bits) {
  CertInterval mm = CertInterval::exact(long(m), bits);
  CertInterval mu = CertInterval::pi(bits) * sqrt(mm);
  CertInterval log8 = CertInterval::log2(bits) * 3L;
  CertInterval num = mu - CertInterval::exact(Rational(alpha + 1), bits) * log(mm) + log(mu - 1L) - log(mu) - log8;
  return num / mm;
}

inline CertInterval H_value(std::size_t n, unsigned r, const Rational& alpha, Precision bits) {
  if (n < 1) throw DomainError("H needs n >= 1");
  return signed_difference([&](std::size_t m) { return h_function(m, alpha, bits); }, r, n);
}

/// g(m) = log(1 + R/T)/m = (log pbar(m) - log T(m)) / m.
inline CertInterval g_function(const OverpartitionTable& t, std::size_t m, Precision bits) {
  return (log_pbar(t, m, bits) - log_main_term(m, bits)) / long(m);
}

inline CertInterval G_value(const OverpartitionTable& t, std::size_t n, unsigned r, Precision bits) {
  if (n < 1) throw DomainError("G needs n >= 1");
  t.at(n + r);
  return signed_difference([&](std::size_t m) { return g_function(t, m, bits); }, r, n);
}

struct HGParts {
  std::size_t n = 0;
  unsigned r = 0;
  Rational alpha;
  CertInterval H;
  CertInterval G;
};

inline HGParts hg_parts(const OverpartitionTable& t, std::size_t n, unsigned r, const Rational& alpha,
                        Precision bits) {
  return {n, r, alpha, H_value(n, r, alpha, bits), G_value(t, n, r, bits)};
}

struct BoundCheck {
  std::size_t n = 0;
  CertInterval value;
  CertInterval bound_lo;
  CertInterval bound_hi;
  Verdict verdict = Verdict::Undetermined;
  bool in_cutoff = true;
  Precision bits = kStartBits;
  bool undetermined() const { return verdict == Verdict::Undetermined; }
};

/// |G_r(n)| < n^{-(r+3/2)}.
inline BoundCheck lemma21_check(const OverpartitionTable& t, std::size_t n, unsigned r,
                                HypothesisPolicy policy = HypothesisPolicy::Record) {
  bool in_cutoff = at_or_above(long(n), N1_cutoff(r));
  if (!in_cutoff && policy == HypothesisPolicy::Enforce)
    throw HypothesisError("|G_r(n)| bound is claimed for n >= N1(r)");
  return refine([&](Precision bits) {
    BoundCheck c;
    c.n = n;
    c.bits = bits;
    c.in_cutoff = in_cutoff;
    c.value = G_value(t, n, r, bits);
    c.bound_hi = pow(CertInterval::exact(long(n), bits), -Rational(2 * r + 3, 2));
    c.bound_lo = -c.bound_hi;
    c.verdict = all_of({certify_less(c.bound_lo, c.value), certify_less(c.value, c.bound_hi)});
    return c;
  });
}

/// sum_{k>=1} 2/(k^2 pi^k) (k/2)_r x^{-(k/2+r+1)}, truncated with a certified
/// geometric tail. For k >= K the term ratio is at most (1+1/K)^r / (pi sqrt x).
/// `terms` overrides the default cut K = max(2r, ceil((bits+16) ln 2 / ln(pi sqrt x))).
inline CertInterval lemma24_series(const CertInterval& x, unsigned r, Precision bits,
                                   std::optional<unsigned long> terms = std::nullopt) {
  CertInterval pi = CertInterval::pi(bits);
  CertInterval sx = sqrt(x);
  double lg = std::log(std::numbers::pi * std::sqrt(x.lo_double()));
  unsigned long K = terms ? std::max(*terms, 1UL)
                          : std::max<unsigned long>(2 * r, static_cast<unsigned long>(
                                                               std::ceil((bits + 16) * std::log(2.0) / lg)));
  CertInterval base = pow(x, -Rational(r + 1));
  CertInterval sum = CertInterval::exact(0L, bits);
  CertInterval last(bits);
  for (unsigned long k = 1; k <= K; ++k) {
    Rational c = 2 * pochhammer(make_rational(BigInt(k), 2), r) / Rational(BigInt(k) * k);
    last = CertInterval::exact(c, bits) / pow_int(pi * sx, long(k)) * base;
    sum += last;
  }
  CertInterval grow = pow_int(CertInterval::exact(make_rational(BigInt(K + 1), BigInt(K)), bits), r);
  CertInterval rho = grow / (pi * sx);
  if (!(mpfr_cmp_ui(rho.hi(), 1) < 0)) throw DomainError("series tail ratio is not below 1");
  CertInterval tail = last * rho / (1L - rho);
  CertInterval pad(bits);
  mpfr_set(pad.hi_mut(), tail.hi(), MPFR_RNDU);
  return sum + pad;
}

struct Lemma24Bounds {
  CertInterval L;
  CertInterval U;
  bool in_cutoff = true;
};

inline Lemma24Bounds UL_lemma24(std::size_t n, unsigned r, const Rational& alpha, Precision bits,
                                HypothesisPolicy policy = HypothesisPolicy::Enforce) {
  if (r < 2) throw DomainError("the H bounds are stated for r >= 2");
  if (n < 1) throw DomainError("the H bounds need n >= 1");
  bool in_cutoff = BigInt(static_cast<unsigned long>(n)) >= lemma24_cutoff(r);
  if (!in_cutoff && policy == HypothesisPolicy::Enforce)
    throw HypothesisError("the H bounds are claimed for n >= ceil(exp(S_r/r!))");
  CertInterval C = C_r(r, bits);
  CertInterval fact = CertInterval::exact(factorial(r), bits);
  CertInterval S = CertInterval::exact(S_seq(r), bits);
  CertInterval log8 = CertInterval::log2(bits) * 3L;
  CertInterval a1 = CertInterval::exact(Rational(alpha + 1), bits);
  CertInterval nn = CertInterval::exact(long(n), bits);
  CertInterval nr = CertInterval::exact(long(n + r), bits);
  Rational half_up = Rational(2 * r + 1, 2);
  auto tail = [&](const CertInterval& x) {
    CertInterval inv = pow(x, -Rational(r + 1));
    return a1 * (fact * log(x) - S) * inv + fact * log8 * inv;
  };
  Lemma24Bounds out;
  out.in_cutoff = in_cutoff;
  out.U = C * pow(nn, -half_up) - lemma24_series(nr, r, bits) - tail(nr);
  out.L = C * pow(nr, -half_up) - lemma24_series(nn, r, bits) - tail(nn);
  return out;
}

/// L < H < U at n.
inline BoundCheck lemma24_check(std::size_t n, unsigned r, const Rational& alpha,
                                HypothesisPolicy policy = HypothesisPolicy::Record) {
  return refine([&](Precision bits) {
    Lemma24Bounds b = UL_lemma24(n, r, alpha, bits, policy);
    BoundCheck c;
    c.n = n;
    c.bits = bits;
    c.in_cutoff = b.in_cutoff;
    c.value = H_value(n, r, alpha, bits);
    c.bound_lo = b.L;
    c.bound_hi = b.U;
    c.verdict = all_of({certify_less(b.L, c.value), certify_less(c.value, b.U)});
    return c;
  });
}

struct SandwichReport {
  std::size_t n = 0;
  unsigned r = 0;
  Rational alpha;
  CertInterval inner;  // C(r)/n^{r+1/2} - C(r,alpha)/n^{r+3/4}
  CertInterval lower;
  CertInterval upper;
  CertInterval value;
  Verdict verdict = Verdict::Undetermined;
  bool in_cutoff = false;
  Precision bits = kStartBits;
  bool undetermined() const { return verdict == Verdict::Undetermined; }
};

/// 0 < log(1 + C/n^{r+1/2} - C(r,alpha)/n^{r+3/4}) < (-1)^r Delta^r log r_alpha(n) < log(1 + C/n^{r+1/2}).
/// `cutoff` is N(r,alpha); computed when not supplied.
inline SandwichReport verify_theorem14(const OverpartitionTable& t, std::size_t n, unsigned r,
                                       const Rational& alpha, std::optional<CutoffValue> cutoff = std::nullopt) {
  if (r < 2) throw DomainError("the sandwich is checked for r >= 2");
  if (!cutoff) cutoff = cutoff_set(r, alpha).N_r_alpha;
  bool in_cutoff = at_or_above(long(n), *cutoff);
  return refine([&](Precision bits) {
    SandwichReport s;
    s.n = n;
    s.r = r;
    s.alpha = alpha;
    s.bits = bits;
    s.in_cutoff = in_cutoff;
    CertInterval nn = CertInterval::exact(long(n), bits);
    CertInterval lead = C_r(r, bits) * pow(nn, -Rational(2 * r + 1, 2));
    s.inner = lead - C_r_alpha(r, alpha, bits) * pow(nn, -Rational(4 * r + 3, 4));
    s.upper = log1p(lead);
    s.value = signed_diff_log(t, n, r, alpha, bits).value;
    Verdict positive = certify_positive(s.inner);
    if (positive != Verdict::Holds) {
      s.verdict = positive;
      return s;
    }
    s.lower = log1p(s.inner);
    s.verdict = all_of({certify_positive(s.lower), certify_less(s.lower, s.value), certify_less(s.value, s.upper)});
    return s;
  });
}

struct AsymptotePoint {
  std::size_t n = 0;
  CertInterval scaled;  // n^{r+1/2} (-1)^r Delta^r log r_alpha(n)
};

struct AsymptoteScan {
  unsigned r = 0;
  Rational alpha;
  CertInterval limit;  // C(r)
  std::vector<AsymptotePoint> points;
};

inline AsymptoteScan asymptote_scan(const OverpartitionTable& t, unsigned r, const Rational& alpha,
                                    const std::vector<std::size_t>& ns, Precision bits = kStartBits) {
  AsymptoteScan out;
  out.r = r;
  out.alpha = alpha;
  out.limit = C_r(r, bits);
  for (std::size_t n : ns) {
    CertInterval scale = pow(CertInterval::exact(long(n), bits), Rational(2 * r + 1, 2));
    out.points.push_back({n, scale * signed_diff_log(t, n, r, alpha, bits).value});
  }
  return out;
}

struct CorollaryChecks {
  std::size_t n = 0;
  Verdict convexity = Verdict::Undetermined;        // r(n)^2 < r(n-1) r(n+1)
  Verdict delta3_negative = Verdict::Undetermined;  // Delta^3 log r(n) < 0
};

/// Strict log-convexity at n by exact integer comparison, for integer alpha and small n:
/// A^{2(n^2-1)} < B^{n(n+1)} C^{n(n-1)} with A = pbar(n)/n^alpha etc.
inline std::optional<Verdict> exact_convexity(const OverpartitionTable& t, std::size_t n, const Rational& alpha) {
  if (alpha.get_den() != 1 || !alpha.get_num().fits_ulong_p() || n > 40 || n < 2) return std::nullopt;
  unsigned long a = alpha.get_num().get_ui();
  auto base = [&](std::size_t m, unsigned long e, BigInt& num, BigInt& den) {
    mpz_pow_ui(num.get_mpz_t(), t.at(m).get_mpz_t(), e);
    BigInt mp;
    mpz_ui_pow_ui(mp.get_mpz_t(), m, a);
    mpz_pow_ui(den.get_mpz_t(), mp.get_mpz_t(), e);
  };
  BigInt an, ad, bn, bd, cn, cd;
  base(n, 2 * (n * n - 1), an, ad);
  base(n - 1, n * (n + 1), bn, bd);
  base(n + 1, n * (n - 1), cn, cd);
  return (an * bd * cd < bn * cn * ad) ? Verdict::Holds : Verdict::Fails;
}

inline CorollaryChecks corollary_checks(const OverpartitionTable& t, std::size_t n, const Rational& alpha) {
  if (n < 2) throw DomainError("corollary checks need n >= 2");
  t.at(n + 3);
  CorollaryChecks c;
  c.n = n;
  Verdict conv = certify_positive(signed_diff_log(t, n - 1, 2, alpha, kStartBits).value);
  if (conv == Verdict::Undetermined) {
    if (auto e = exact_convexity(t, n, alpha)) conv = *e;
    else conv = refine([&](Precision b) { return certify_positive(signed_diff_log(t, n - 1, 2, alpha, b).value); });
  }
  c.convexity = conv;
  c.delta3_negative =
      refine([&](Precision b) { return certify_positive(signed_diff_log(t, n, 3, alpha, b).value); });
  return c;
}

}  // namespace opart
