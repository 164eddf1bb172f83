#pragma once

// Named constants and cutoffs. Cutoffs whose logarithm exceeds 10^6 are kept
// in exp-form (an enclosure of their natural log) and compared in log-domain.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "opart/certified_arith.hpp"
#include "opart/errors.hpp"

namespace opart {

/// Values with log above this are never materialized as integers.
inline constexpr double kExpFormLogThreshold = 1e6;

class CutoffValue {
 public:
  enum class Form { Integer, ExpForm };

  CutoffValue() : CutoffValue(BigInt(0)) {}
  explicit CutoffValue(BigInt v) : form_(Form::Integer), integer_(std::move(v)), ln_(kStartBits) {}
  static CutoffValue integer(BigInt v) { return CutoffValue(std::move(v)); }
  static CutoffValue exp_form(CertInterval ln) {
    CutoffValue c;
    c.form_ = Form::ExpForm;
    c.ln_ = std::move(ln);
    return c;
  }

  Form form() const { return form_; }
  bool is_integer() const { return form_ == Form::Integer; }
  const BigInt& value() const {
    if (!is_integer()) throw DomainError("exp-form cutoff has no materialized integer");
    return integer_;
  }
  const CertInterval& ln() const {
    if (is_integer()) throw DomainError("integer cutoff: use log_value()");
    return ln_;
  }

  /// Enclosure of the natural log of the cutoff.
  CertInterval log_value(Precision bits) const {
    if (!is_integer()) return ln_.with_bits(std::max(bits, ln_.bits()));
    if (integer_ <= 0) throw DomainError("log of a non-positive cutoff");
    return log(CertInterval::exact(integer_, bits));
  }

  std::string to_string() const {
    if (is_integer()) return integer_.get_str();
    return "exp(" + ln_.lo_string(20) + ".." + ln_.hi_string(20) + ")";
  }

 private:
  Form form_;
  BigInt integer_;
  CertInterval ln_;
};

inline Tri cutoff_compare(const CutoffValue& a, const CutoffValue& b) {
  if (a.is_integer() && b.is_integer()) {
    int c = cmp(a.value(), b.value());
    return c < 0 ? Tri::Less : (c > 0 ? Tri::Greater : Tri::Undetermined);
  }
  return refine([&](Precision bits) { return tri_compare(a.log_value(bits), b.log_value(bits)); });
}

/// Larger of two cutoffs. Ties and unresolved overlaps keep the first.
inline const CutoffValue& cutoff_max(const CutoffValue& a, const CutoffValue& b) {
  return cutoff_compare(a, b) == Tri::Less ? b : a;
}

inline CutoffValue cutoff_max(const std::vector<CutoffValue>& xs) {
  if (xs.empty()) throw DomainError("max of no cutoffs");
  CutoffValue best = xs.front();
  for (const auto& x : xs) best = cutoff_max(best, x);
  return best;
}

/// n >= cutoff, for an integer n.
inline bool at_or_above(long n, const CutoffValue& c) {
  if (c.is_integer()) return BigInt(n) >= c.value();
  return cutoff_compare(CutoffValue(BigInt(n)), c) == Tri::Greater;
}

/// Smallest m >= 0 with m^q >= x^p, for x >= 0, p >= 0, q >= 1.
inline BigInt ceil_rational_power(const Rational& x, unsigned long p, unsigned long q) {
  if (x < 0 || q == 0) throw DomainError("ceil_rational_power needs x >= 0 and q >= 1");
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), p);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), p);
  // target: smallest m with m^q * den >= num
  BigInt c = num / den + 1;
  BigInt m;
  mpz_root(m.get_mpz_t(), c.get_mpz_t(), q);
  auto ok = [&](const BigInt& v) {
    BigInt t;
    mpz_pow_ui(t.get_mpz_t(), v.get_mpz_t(), q);
    return t * den >= num;
  };
  while (!ok(m)) ++m;
  while (m > 0 && ok(m - 1)) --m;
  return m;
}

/// Certified ceiling of an interval-valued quantity, raising precision until
/// the enclosure stops straddling an integer.
inline BigInt certified_ceiling(const std::function<CertInterval(Precision)>& value) {
  for (Precision bits = kStartBits;; bits = std::min<Precision>(bits * 2, kCapBits)) {
    if (auto c = certified_ceil(value(bits))) return *c;
    if (bits >= kCapBits) throw WidthError("ceiling not certified at the precision cap");
  }
}

/// Encloses ln(ceil(e^x)) given an enclosure of x > threshold: the ceiling
/// adds less than e^{-x} < 2^{-60} to the log.
inline CertInterval ceil_exp_log(const CertInterval& x) {
  CertInterval slack(x.bits());
  mpfr_set_ui_2exp(slack.hi_mut(), 1, -60, MPFR_RNDU);
  return x + slack;
}

/// ceil(e^x) as a cutoff.
inline CutoffValue ceil_exp(const std::function<CertInterval(Precision)>& x) {
  CertInterval x0 = x(kStartBits);
  if (x0.hi_double() > kExpFormLogThreshold) return CutoffValue::exp_form(ceil_exp_log(x0));
  return CutoffValue(certified_ceiling([&](Precision b) { return exp(x(b)); }));
}

/// ceil(x^{p/q}) for exact rational x; exp-form when the log is huge.
inline CutoffValue ceil_power(const Rational& x, unsigned long p, unsigned long q) {
  if (x > 0) {
    CertInterval lg = CertInterval::exact(make_rational(BigInt(p), BigInt(q)), kStartBits) *
                      log(CertInterval::exact(x, kStartBits));
    if (lg.hi_double() > kExpFormLogThreshold) return CutoffValue::exp_form(ceil_exp_log(lg));
  }
  return CutoffValue(ceil_rational_power(x, p, q));
}

/// ceil of a positive interval-valued quantity given with its log.
inline CutoffValue ceil_value(const std::function<CertInterval(Precision)>& value,
                              const std::function<CertInterval(Precision)>& log_value) {
  CertInterval lg = log_value(kStartBits);
  if (lg.hi_double() > kExpFormLogThreshold) return CutoffValue::exp_form(ceil_exp_log(lg));
  return CutoffValue(certified_ceiling(value));
}

/// S_0 = 0, S_n = n S_{n-1} + (n-1)!.
inline BigInt S_seq(unsigned r) {
  BigInt s = 0;
  for (unsigned n = 1; n <= r; ++n) s = BigInt(n) * s + factorial(n - 1);
  return s;
}

/// N_0(m): 1 at m = 1, otherwise 2m log m - m log log m.
inline CertInterval N0(unsigned long m, Precision bits) {
  if (m == 0) throw DomainError("N0 is defined for m >= 1");
  if (m == 1) return CertInterval::exact(1L, bits);
  CertInterval mm = CertInterval::exact(long(m), bits);
  CertInterval lm = log(mm);
  return mm * 2L * lm - mm * log(lm);
}

/// C(r) = pi (1/2)_r.
inline CertInterval C_r(unsigned r, Precision bits) {
  return CertInterval::pi(bits) * pochhammer(make_rational(1, 2), r);
}

/// C(r, alpha) = (alpha+1) r! + (r-1)! log 8 + 1.
inline CertInterval C_r_alpha(unsigned r, const Rational& alpha, Precision bits) {
  if (r < 1) throw DomainError("C(r, alpha) needs r >= 1");
  CertInterval log8 = CertInterval::log2(bits) * 3L;
  return CertInterval::exact(Rational((alpha + 1) * Rational(factorial(r))) + 1, bits) + log8 * factorial(r - 1);
}

/// sum_{k=0}^{2r-2} w / ((k+1)^2 pi^{k+1}) ((k+1)/2)_r / r^k + 2r/10^r, for
/// summand weight w = 1 (definition display) or w = 2 (as used in the proof).
inline CertInterval C2_r(unsigned r, unsigned weight, Precision bits) {
  CertInterval pi = CertInterval::pi(bits);
  CertInterval sum = CertInterval::exact(0L, bits);
  for (unsigned k = 0; k + 2 <= 2 * r; ++k) {
    BigInt rk;
    mpz_ui_pow_ui(rk.get_mpz_t(), r, k);
    Rational c = pochhammer(make_rational(BigInt(k + 1), 2), r) * weight / (Rational(BigInt((k + 1) * (k + 1))) * rk);
    sum += CertInterval::exact(c, bits) / pow_int(pi, k + 1);
  }
  BigInt ten_r;
  mpz_ui_pow_ui(ten_r.get_mpz_t(), 10, r);
  return sum + CertInterval::exact(make_rational(BigInt(2 * r), ten_r), bits);
}

/// N_1(r) = max{85, ceil((4/pi^2) N_0(2r+2)^2)}, r >= 1.
inline CutoffValue N1_cutoff(unsigned r) {
  if (r < 1) throw DomainError("N1 needs r >= 1");
  auto v = [r](Precision b) { return square(N0(2 * r + 2, b)) * 4L / square(CertInterval::pi(b)); };
  return cutoff_max(CutoffValue(BigInt(85)), CutoffValue(certified_ceiling(v)));
}

struct NamedCutoff {
  std::string name;
  CutoffValue value;
  std::string provenance;
};

struct CutoffSet {
  unsigned r = 2;
  Rational alpha;
  CertInterval N0_2r2;
  BigInt S_r;
  CutoffValue N1_r;
  CutoffValue exp_S_r;  // ceil(e^{S_r / r!})
  CertInterval C_r;
  CertInterval C_r_alpha;
  CertInterval C2_r_single;  // summand weight 1
  CertInterval C2_r_double;  // summand weight 2
  CutoffValue N2_r_square;   // ceil(2 C(r)^2)
  CutoffValue N2_r_root;     // ceil(2 C(r)^{2/r})
  CutoffValue N2_r_fact_lower;  // ceil((2^{r+1}/((r-1)! log 8))^2)
  CutoffValue N2_r_fact_upper;  // ceil((2^{r+1}/(r! log 8))^2)
  CutoffValue N2_r;
  CutoffValue N3_r_alpha;
  CutoffValue N_r_alpha;
  CutoffValue Ntilde1, Ntilde2, Ntilde3, Ntilde;

  std::vector<NamedCutoff> entries() const {
    return {
        {"N1(r)", N1_r, "cutoff.N1"},
        {"ceil(exp(S_r/r!))", exp_S_r, "cutoff.expS"},
        {"N2(r).square", N2_r_square, "cutoff.N2.square"},
        {"N2(r).root", N2_r_root, "cutoff.N2.root"},
        {"N2(r).fact_r-1", N2_r_fact_lower, "cutoff.N2.fact_r-1"},
        {"N2(r).fact_r", N2_r_fact_upper, "cutoff.N2.fact_r"},
        {"N2(r)", N2_r, "cutoff.N2"},
        {"N3(r,alpha)", N3_r_alpha, "cutoff.N3"},
        {"N(r,alpha)", N_r_alpha, "cutoff.N"},
        {"Ntilde1(alpha)", Ntilde1, "cutoff.Ntilde1"},
        {"Ntilde2(alpha)", Ntilde2, "cutoff.Ntilde2"},
        {"Ntilde3(alpha)", Ntilde3, "cutoff.Ntilde3"},
        {"Ntilde(alpha)", Ntilde, "cutoff.Ntilde"},
    };
  }
};

/// The three small-alpha cutoffs used by the power-quotient lemma.
inline void fill_ntilde(CutoffSet& s, const Rational& alpha) {
  auto root = [](const Rational& x, unsigned long q) { return CutoffValue(ceil_rational_power(x, 1, q)); };
  s.Ntilde1 = cutoff_max({root(2 * alpha, 2), root(3 * alpha, 3), root(11 * alpha / 3, 4), root(10 * alpha, 5)});
  s.Ntilde2 = cutoff_max({CutoffValue(BigInt(2)), root(2 * alpha, 2), root(3 * alpha, 3), root(11 * alpha / 3, 4),
                          root(12 * alpha, 5)});
  s.Ntilde3 = cutoff_max({CutoffValue(BigInt(5505)), ceil_power(4 * alpha / (alpha * alpha + 1), 4, 3),
                          ceil_power(4 * alpha, 4, 11)});
  s.Ntilde = cutoff_max({s.Ntilde1, s.Ntilde2, s.Ntilde3});
}

/// Ntilde(alpha) alone.
inline CutoffValue ntilde(const Rational& alpha) {
  CutoffSet s;
  fill_ntilde(s, alpha);
  return s.Ntilde;
}

inline CutoffSet cutoff_set(unsigned r, const Rational& alpha, Precision bits = kStartBits) {
  if (r < 2) throw DomainError("cutoff_set needs r >= 2");
  if (alpha < 0) throw DomainError("alpha must be non-negative");
  CutoffSet s;
  s.r = r;
  s.alpha = alpha;
  s.N0_2r2 = N0(2 * r + 2, bits);
  s.S_r = S_seq(r);
  s.C_r = C_r(r, bits);
  s.C_r_alpha = C_r_alpha(r, alpha, bits);
  s.C2_r_single = C2_r(r, 1, bits);
  s.C2_r_double = C2_r(r, 2, bits);

  s.N1_r = N1_cutoff(r);

  Rational sr_over_fact = make_rational(s.S_r, factorial(r));
  s.exp_S_r = ceil_exp([sr_over_fact](Precision b) { return CertInterval::exact(sr_over_fact, b); });

  s.N2_r_square = CutoffValue(certified_ceiling([r](Precision b) { return square(C_r(r, b)) * 2L; }));
  s.N2_r_root = CutoffValue(
      certified_ceiling([r](Precision b) { return pow(C_r(r, b), make_rational(2, BigInt(r))) * 2L; }));
  auto fact_variant = [r](unsigned long f) {
    return [r, f](Precision b) {
      BigInt two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, r + 1);
      CertInterval log8 = CertInterval::log2(b) * 3L;
      return square(CertInterval::exact(two_pow, b) / (log8 * factorial(f)));
    };
  };
  s.N2_r_fact_lower = CutoffValue(certified_ceiling(fact_variant(r - 1)));
  s.N2_r_fact_upper = CutoffValue(certified_ceiling(fact_variant(r)));
  s.N2_r = cutoff_max({s.N2_r_square, s.N2_r_root, s.N2_r_fact_lower, s.N2_r_fact_upper});

  auto n3_third = [r](Precision b) {
    // weight 2 dominates weight 1 termwise
    CertInterval base = C_r(r, b) * long(4 * r * r) + C2_r(r, 2, b);
    return pow(base, Rational(4, 3));
  };
  auto n3_fourth = [r, alpha](Precision b) { return pow_int(C_r_alpha(r, alpha, b) / C_r(r, b), 4); };
  s.N3_r_alpha = cutoff_max({CutoffValue(BigInt(5505)), CutoffValue(BigInt(4 * r * r)),
                             CutoffValue(certified_ceiling(n3_third)), CutoffValue(certified_ceiling(n3_fourth))});
  s.N_r_alpha = cutoff_max({s.N1_r, s.exp_S_r, s.N2_r, s.N3_r_alpha});
  fill_ntilde(s, alpha);
  return s;
}

/// ceil(e^{S_r/r!}), the hypothesis of the H sandwich.
inline BigInt lemma24_cutoff(unsigned r) {
  Rational x = make_rational(S_seq(r), factorial(r));
  return certified_ceiling([&](Precision b) { return exp(CertInterval::exact(x, b)); });
}

inline constexpr long kTuranLiteralCutoff = 343361460986L;

struct TuranCutoffSet {
  Rational alpha;
  CutoffValue n_u_exp, n_u_pow, n_u;
  CutoffValue n_l_exp, n_l_pow, n_l;
  CutoffValue n_u1_exp, n_u1_pow, n_u1;
  CutoffValue n_l1_exp, n_l1_pow, n_l1;
  CutoffValue N1;
  CutoffValue N2_1, N2_2, N2;
  CutoffValue Ntilde;
  CutoffValue literal;
  CutoffValue N_T;

  std::vector<NamedCutoff> entries() const {
    return {
        {"n_u(alpha)", n_u, "turan.n_u"},       {"n_l(alpha)", n_l, "turan.n_l"},
        {"n_u1(alpha)", n_u1, "turan.n_u1"},    {"n_l1(alpha)", n_l1, "turan.n_l1"},
        {"N1(alpha)", N1, "turan.N1"},          {"N2[1](alpha)", N2_1, "turan.N2.1"},
        {"N2[2](alpha)", N2_2, "turan.N2.2"},   {"N2(alpha)", N2, "turan.N2"},
        {"Ntilde(alpha)", Ntilde, "cutoff.Ntilde"}, {"literal", literal, "turan.literal"},
        {"N_T(alpha)", N_T, "turan.N_T"},
    };
  }

  /// Components of N_T in the order of its defining max.
  std::vector<CutoffValue> N_T_components() const { return {Ntilde, N1, N2, literal}; }
};

/// 2^{e} for rational e, exact for non-negative integers.
inline CertInterval two_pow(const Rational& e, Precision bits) { return pow2(e, bits); }

/// (a, b) pairs of the log-linear tails a + b log n in U, L, U1, L1.
struct LogLinear {
  CertInterval a;
  CertInterval b;
};

inline LogLinear tail_u(const Rational& alpha, Precision bits) {
  CertInterval a = CertInterval::exact(6 * alpha + 4096, bits) + two_pow(31 + 18 * alpha, bits);
  return {a, CertInterval::exact(2 + 17 * alpha, bits)};
}
inline LogLinear tail_l(const Rational& alpha, Precision bits) {
  return {CertInterval::exact(258L, bits), two_pow(16 + 7 * alpha, bits) + 80L};
}
inline LogLinear tail_u1(const Rational& alpha, Precision bits) {
  CertInterval pi2 = square(CertInterval::pi(bits));
  CertInterval log8 = CertInterval::log2(bits) * 3L;
  CertInterval a = CertInterval::exact(12L, bits) + pi2 * 4122L - pi2 * log8 * 12L +
                   pi2 * CertInterval::exact(32 * alpha, bits) + pi2 * two_pow(31 + 18 * alpha, bits);
  return {a, pi2 * CertInterval::exact(2 + 17 * alpha, bits)};
}
inline LogLinear tail_l1(const Rational& alpha, Precision bits) {
  CertInterval pi = CertInterval::pi(bits);
  CertInterval pi2 = square(pi);
  CertInterval a = CertInterval::exact(256L, bits) +
                   (pi2 * 9L * (pi2 + 4L) - 16L) * 105L / (pow_int(pi, 3) * 128L);
  CertInterval b = (CertInterval::exact(3 * alpha + 13, bits) + two_pow(13 + 7 * alpha, bits)) * 8L;
  return {a, b};
}

inline TuranCutoffSet turan_cutoff_set(const Rational& alpha) {
  if (alpha < 0) throw DomainError("alpha must be non-negative");
  TuranCutoffSet s;
  s.alpha = alpha;
  auto ratio = [](LogLinear (*f)(const Rational&, Precision), Rational al) {
    return [f, al](Precision b) {
      LogLinear t = f(al, b);
      return t.a / t.b;
    };
  };
  s.n_u_exp = ceil_exp(ratio(tail_u, alpha));
  s.n_u_pow = ceil_power(4 + 34 * alpha, 19, 1);
  s.n_u = cutoff_max(s.n_u_exp, s.n_u_pow);

  s.n_l_exp = ceil_exp(ratio(tail_l, alpha));
  // (2b)^19 with b = 80 + 2^{16+7 alpha}
  auto n_l_base = [alpha](Precision b) { return two_pow(17 + 7 * alpha, b) + 160L; };
  s.n_l_pow = ceil_value([=](Precision b) { return pow_int(n_l_base(b), 19); },
                         [=](Precision b) { return log(n_l_base(b)) * 19L; });
  s.n_l = cutoff_max(s.n_l_exp, s.n_l_pow);

  s.n_u1_exp = ceil_exp(ratio(tail_u1, alpha));
  auto n_u1_base = [alpha](Precision b) {
    return pow_int(CertInterval::pi(b), 2) * CertInterval::exact(4 + 34 * alpha, b);
  };
  s.n_u1_pow = ceil_value([=](Precision b) { return pow_int(n_u1_base(b), 19); },
                          [=](Precision b) { return log(n_u1_base(b)) * 19L; });
  s.n_u1 = cutoff_max(s.n_u1_exp, s.n_u1_pow);

  s.n_l1_exp = ceil_exp(ratio(tail_l1, alpha));
  auto n_l1_base = [alpha](Precision b) {
    return (CertInterval::exact(3 * alpha + 13, b) + two_pow(13 + 7 * alpha, b)) * 16L;
  };
  s.n_l1_pow = ceil_value([=](Precision b) { return pow_int(n_l1_base(b), 19); },
                          [=](Precision b) { return log(n_l1_base(b)) * 19L; });
  s.n_l1 = cutoff_max(s.n_l1_exp, s.n_l1_pow);

  s.N1 = cutoff_max({s.n_u, s.n_l, s.n_u1, s.n_l1});

  auto log8 = [](Precision b) { return CertInterval::log2(b) * 3L; };
  Rational a1 = 1 + alpha;
  auto e1 = [=](Precision b) { return (CertInterval::exact(3 * a1, b) - log8(b) * 2L) / CertInterval::exact(2 * a1, b); };
  auto e2 = [=](Precision b) { return -e1(b); };
  auto e3 = [=](Precision b) {
    CertInterval pi2 = square(CertInterval::pi(b));
    return (3L / pi2 + CertInterval::exact(11 * a1, b) - log8(b) * 6L) / CertInterval::exact(6 * a1, b);
  };
  auto e4 = [=](Precision b) { return -e3(b); };
  CutoffValue ce1 = ceil_exp(e1), ce2 = ceil_exp(e2), ce3 = ceil_exp(e3), ce4 = ceil_exp(e4);
  s.N2_1 = cutoff_max({ce1, ce2, ceil_power(4 * a1, 227, 1)});
  s.N2_2 = cutoff_max({ce1, ce2, ce3, ce4, ceil_power(12 * a1, 227, 1)});
  s.N2 = cutoff_max(s.N2_1, s.N2_2);

  s.Ntilde = ntilde(alpha);
  s.literal = CutoffValue(BigInt(kTuranLiteralCutoff));
  s.N_T = cutoff_max(s.N_T_components());
  return s;
}

}  // namespace opart
