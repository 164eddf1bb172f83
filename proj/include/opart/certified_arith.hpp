#pragma once

// Directed-rounding interval arithmetic on top of MPFR.
//
// Every CertInterval [lo, hi] is a closed enclosure: lo is rounded toward -inf
// and hi toward +inf at each step, so the exact mathematical result of an
// operation on any points of the inputs lies inside the output. This is the
// only place in the library that touches rounding modes.

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "opart/errors.hpp"

namespace opart {

using BigInt = mpz_class;
using Rational = mpq_class;
using Precision = mpfr_prec_t;

/// Starting precision of every certified check.
inline constexpr Precision kStartBits = 128;
/// Upper limit of the doubling schedule; past it a check reports Undetermined.
inline constexpr Precision kCapBits = 16384;

enum class Tri { Less, Greater, Undetermined };
enum class Verdict { Holds, Fails, Undetermined };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::Less: return "Less";
    case Tri::Greater: return "Greater";
    default: return "Undetermined";
  }
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    default: return "Undetermined";
  }
}

/// Combine verdicts of a conjunction: any failure wins, then any undetermined.
inline Verdict all_of(std::initializer_list<Verdict> vs) {
  Verdict out = Verdict::Holds;
  for (Verdict v : vs) {
    if (v == Verdict::Fails) return Verdict::Fails;
    if (v == Verdict::Undetermined) out = Verdict::Undetermined;
  }
  return out;
}

/// Exact rational in lowest terms; gmp canonicalizes on construction.
inline Rational make_rational(const BigInt& num, const BigInt& den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Base-10 integer with optional sign; gmp's default base would read "010" as octal.
inline BigInt parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size() || text.find_first_not_of("0123456789", start) != std::string::npos)
    throw FormatError("malformed integer: " + text);
  BigInt v(text.substr(start), 10);
  return text[0] == '-' ? BigInt(-v) : v;
}

/// Parses "2.5", "-3", "7/2" or "1e-3" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw FormatError("empty number");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw FormatError("zero denominator: " + text);
    return make_rational(parse_integer(text.substr(0, slash)), den);
  }
  std::string mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    BigInt ex = parse_integer(text.substr(e + 1));
    if (!ex.fits_slong_p() || abs(ex) > 100000) throw FormatError("exponent out of range: " + text);
    exponent = ex.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.erase(0, 1);
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_point) throw FormatError("malformed number: " + text);
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++scale;
    } else {
      throw FormatError("malformed number: " + text);
    }
  }
  if (digits.empty()) throw FormatError("malformed number: " + text);
  BigInt num(digits, 10);
  if (negative) num = -num;
  exponent -= scale;
  BigInt p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent >= 0 ? make_rational(num * p10) : make_rational(num, p10);
}

/// Rising factorial (a)_r = a(a+1)...(a+r-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned r) {
  Rational out = 1;
  for (unsigned i = 0; i < r; ++i) out *= a + i;
  return out;
}

inline BigInt factorial(unsigned r) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), r);
  return out;
}

inline BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Renders an MPFR value in scientific notation with `digits` significant
/// digits, rounded in direction `rnd`.
inline std::string to_decimal(mpfr_srcptr x, std::size_t digits, mpfr_rnd_t rnd) {
  if (mpfr_nan_p(x)) return "nan";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(x)) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, x, rnd);
  std::string s(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (s[0] == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  std::string out = sign + s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

class CertInterval {
 public:
  explicit CertInterval(Precision bits = kStartBits) {
    init(bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  CertInterval(const CertInterval& other) {
    init(other.bits());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }

  CertInterval(CertInterval&& other) noexcept {
    mpfr_init2(lo_, MPFR_PREC_MIN);
    mpfr_init2(hi_, MPFR_PREC_MIN);
    swap(other);
  }

  CertInterval& operator=(CertInterval other) noexcept {
    swap(other);
    return *this;
  }

  ~CertInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  void swap(CertInterval& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }

  static CertInterval exact(long v, Precision bits) {
    CertInterval out(bits);
    mpfr_set_si(out.lo_, v, MPFR_RNDD);
    mpfr_set_si(out.hi_, v, MPFR_RNDU);
    return out;
  }

  static CertInterval exact(const BigInt& v, Precision bits) {
    CertInterval out(bits);
    mpfr_set_z(out.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(out.hi_, v.get_mpz_t(), MPFR_RNDU);
    return out;
  }

  static CertInterval exact(const Rational& v, Precision bits) {
    CertInterval out(bits);
    mpfr_set_q(out.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, v.get_mpq_t(), MPFR_RNDU);
    return out;
  }

  /// Encloses a double that is already known to bound a value from both sides.
  static CertInterval from_bounds(double lo, double hi, Precision bits) {
    if (!(lo <= hi)) throw DomainError("from_bounds: lo > hi");
    CertInterval out(bits);
    mpfr_set_d(out.lo_, lo, MPFR_RNDD);
    mpfr_set_d(out.hi_, hi, MPFR_RNDU);
    return out;
  }

  static CertInterval from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Precision bits) {
    CertInterval out(bits);
    mpfr_set(out.lo_, lo, MPFR_RNDD);
    mpfr_set(out.hi_, hi, MPFR_RNDU);
    if (mpfr_greater_p(out.lo_, out.hi_)) throw DomainError("from_endpoints: lo > hi");
    return out;
  }

  static CertInterval pi(Precision bits) {
    CertInterval out(bits);
    mpfr_const_pi(out.lo_, MPFR_RNDD);
    mpfr_const_pi(out.hi_, MPFR_RNDU);
    return out;
  }

  static CertInterval log2(Precision bits) {
    CertInterval out(bits);
    mpfr_const_log2(out.lo_, MPFR_RNDD);
    mpfr_const_log2(out.hi_, MPFR_RNDU);
    return out;
  }

  Precision bits() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  /// Nearest double to the midpoint; for reporting only.
  double mid_double() const {
    mpfr_t m;
    mpfr_init2(m, bits() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
  }
  /// Upper bound on hi - lo.
  double width() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
  }

  bool is_positive() const { return mpfr_sgn(lo_) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_) < 0; }
  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
  bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

  bool contains(const BigInt& v) const {
    return mpfr_cmp_z(lo_, v.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, v.get_mpz_t()) >= 0;
  }
  bool contains(const Rational& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
  }
  bool contains(long v) const { return contains(BigInt(v)); }
  bool contains(const CertInterval& inner) const {
    return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
  }

  /// Same enclosure re-rounded outward to a different precision.
  CertInterval with_bits(Precision bits) const {
    CertInterval out(bits);
    mpfr_set(out.lo_, lo_, MPFR_RNDD);
    mpfr_set(out.hi_, hi_, MPFR_RNDU);
    return out;
  }

  std::string lo_string(std::size_t digits) const { return to_decimal(lo_, digits, MPFR_RNDD); }
  std::string hi_string(std::size_t digits) const { return to_decimal(hi_, digits, MPFR_RNDU); }

  CertInterval operator-() const {
    CertInterval out(bits());
    mpfr_neg(out.lo_, hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    return out;
  }

  friend CertInterval operator+(const CertInterval& a, const CertInterval& b) {
    CertInterval out(std::max(a.bits(), b.bits()));
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
  }

  friend CertInterval operator-(const CertInterval& a, const CertInterval& b) {
    CertInterval out(std::max(a.bits(), b.bits()));
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
  }

  friend CertInterval operator*(const CertInterval& a, const CertInterval& b) {
    CertInterval out(std::max(a.bits(), b.bits()));
    mpfr_t t;
    mpfr_init2(t, out.bits());
    mpfr_srcptr al[2] = {a.lo_, a.hi_};
    mpfr_srcptr bl[2] = {b.lo_, b.hi_};
    mpfr_mul(out.lo_, al[0], bl[0], MPFR_RNDD);
    mpfr_mul(out.hi_, al[0], bl[0], MPFR_RNDU);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (i == 0 && j == 0) continue;
        mpfr_mul(t, al[i], bl[j], MPFR_RNDD);
        mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
        mpfr_mul(t, al[i], bl[j], MPFR_RNDU);
        mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
      }
    }
    mpfr_clear(t);
    return out;
  }

  friend CertInterval operator/(const CertInterval& a, const CertInterval& b) {
    if (b.contains_zero()) throw DomainError("interval division by an enclosure of zero");
    CertInterval out(std::max(a.bits(), b.bits()));
    mpfr_t t;
    mpfr_init2(t, out.bits());
    mpfr_srcptr al[2] = {a.lo_, a.hi_};
    mpfr_srcptr bl[2] = {b.lo_, b.hi_};
    mpfr_div(out.lo_, al[0], bl[0], MPFR_RNDD);
    mpfr_div(out.hi_, al[0], bl[0], MPFR_RNDU);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (i == 0 && j == 0) continue;
        mpfr_div(t, al[i], bl[j], MPFR_RNDD);
        mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
        mpfr_div(t, al[i], bl[j], MPFR_RNDU);
        mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
      }
    }
    mpfr_clear(t);
    return out;
  }

  template <class T>
    requires std::is_integral_v<T>
  friend CertInterval operator*(const CertInterval& a, T v) {
    return a * CertInterval::exact(static_cast<long>(v), a.bits());
  }
  template <class T>
    requires std::is_integral_v<T>
  friend CertInterval operator*(T v, const CertInterval& a) {
    return a * v;
  }
  template <class T>
    requires std::is_integral_v<T>
  friend CertInterval operator/(const CertInterval& a, T v) {
    return a / CertInterval::exact(static_cast<long>(v), a.bits());
  }
  template <class T>
    requires std::is_integral_v<T>
  friend CertInterval operator/(T v, const CertInterval& a) {
    return CertInterval::exact(static_cast<long>(v), a.bits()) / a;
  }
  template <class T>
    requires std::is_integral_v<T>
  friend CertInterval operator+(const CertInterval& a, T v) {
    return a + CertInterval::exact(static_cast<long>(v), a.bits());
  }
  template <class T>
    requires std::is_integral_v<T>
  friend CertInterval operator+(T v, const CertInterval& a) {
    return a + v;
  }
  template <class T>
    requires std::is_integral_v<T>
  friend CertInterval operator-(const CertInterval& a, T v) {
    return a - CertInterval::exact(static_cast<long>(v), a.bits());
  }
  template <class T>
    requires std::is_integral_v<T>
  friend CertInterval operator-(T v, const CertInterval& a) {
    return CertInterval::exact(static_cast<long>(v), a.bits()) - a;
  }
  friend CertInterval operator*(const CertInterval& a, const Rational& q) {
    return a * CertInterval::exact(q, a.bits());
  }
  friend CertInterval operator*(const Rational& q, const CertInterval& a) { return a * q; }
  friend CertInterval operator+(const CertInterval& a, const Rational& q) {
    return a + CertInterval::exact(q, a.bits());
  }
  friend CertInterval operator+(const Rational& q, const CertInterval& a) { return a + q; }
  friend CertInterval operator*(const CertInterval& a, const BigInt& z) {
    return a * CertInterval::exact(z, a.bits());
  }
  friend CertInterval operator*(const BigInt& z, const CertInterval& a) { return a * z; }

  CertInterval& operator+=(const CertInterval& b) { return *this = *this + b; }
  CertInterval& operator-=(const CertInterval& b) { return *this = *this - b; }
  CertInterval& operator*=(const CertInterval& b) { return *this = *this * b; }

 private:
  void init(Precision bits) {
    mpfr_init2(lo_, bits);
    mpfr_init2(hi_, bits);
  }

  mpfr_t lo_;
  mpfr_t hi_;
};

/// Smallest interval containing both arguments.
inline CertInterval hull(const CertInterval& a, const CertInterval& b) {
  CertInterval out(std::max(a.bits(), b.bits()));
  mpfr_min(out.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(out.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return out;
}

/// a widened by [-r.hi, +r.hi] for a non-negative radius r.
inline CertInterval widen(const CertInterval& a, const CertInterval& radius) {
  CertInterval out(std::max(a.bits(), radius.bits()));
  mpfr_sub(out.lo_mut(), a.lo(), radius.hi(), MPFR_RNDD);
  mpfr_add(out.hi_mut(), a.hi(), radius.hi(), MPFR_RNDU);
  return out;
}

/// Less iff hi(a) < lo(b); Greater iff lo(a) > hi(b).
inline Tri tri_compare(const CertInterval& a, const CertInterval& b) {
  if (mpfr_less_p(a.hi(), b.lo())) return Tri::Less;
  if (mpfr_greater_p(a.lo(), b.hi())) return Tri::Greater;
  return Tri::Undetermined;
}

/// Verdict of the strict claim a < b.
inline Verdict certify_less(const CertInterval& a, const CertInterval& b) {
  switch (tri_compare(a, b)) {
    case Tri::Less: return Verdict::Holds;
    case Tri::Greater: return Verdict::Fails;
    default: return Verdict::Undetermined;
  }
}

/// Verdict of the strict claim 0 < a.
inline Verdict certify_positive(const CertInterval& a) {
  return certify_less(CertInterval::exact(0L, a.bits()), a);
}

namespace detail {

template <class F, class G>
CertInterval monotone(const CertInterval& x, F&& lower, G&& upper) {
  CertInterval out(x.bits());
  lower(out.lo_mut(), x.lo());
  upper(out.hi_mut(), x.hi());
  return out;
}

}  // namespace detail

inline CertInterval exp(const CertInterval& x) {
  return detail::monotone(
      x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_exp(r, a, MPFR_RNDD); },
      [](mpfr_ptr r, mpfr_srcptr a) { mpfr_exp(r, a, MPFR_RNDU); });
}

inline CertInterval log(const CertInterval& x) {
  if (mpfr_sgn(x.lo()) <= 0) throw DomainError("log of an interval not bounded away from 0");
  return detail::monotone(
      x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_log(r, a, MPFR_RNDD); },
      [](mpfr_ptr r, mpfr_srcptr a) { mpfr_log(r, a, MPFR_RNDU); });
}

inline CertInterval log1p(const CertInterval& x) {
  if (mpfr_cmp_si(x.lo(), -1) <= 0) throw DomainError("log1p of an interval reaching -1");
  return detail::monotone(
      x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_log1p(r, a, MPFR_RNDD); },
      [](mpfr_ptr r, mpfr_srcptr a) { mpfr_log1p(r, a, MPFR_RNDU); });
}

inline CertInterval sqrt(const CertInterval& x) {
  if (mpfr_sgn(x.lo()) < 0) throw DomainError("sqrt of an interval with negative part");
  return detail::monotone(
      x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_sqrt(r, a, MPFR_RNDD); },
      [](mpfr_ptr r, mpfr_srcptr a) { mpfr_sqrt(r, a, MPFR_RNDU); });
}

inline CertInterval sinh(const CertInterval& x) {
  return detail::monotone(
      x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_sinh(r, a, MPFR_RNDD); },
      [](mpfr_ptr r, mpfr_srcptr a) { mpfr_sinh(r, a, MPFR_RNDU); });
}

inline CertInterval cosh(const CertInterval& x) {
  CertInterval out(x.bits());
  if (x.contains_zero()) {
    mpfr_set_ui(out.lo_mut(), 1, MPFR_RNDD);
    mpfr_t t;
    mpfr_init2(t, x.bits());
    mpfr_cosh(out.hi_mut(), x.lo(), MPFR_RNDU);
    mpfr_cosh(t, x.hi(), MPFR_RNDU);
    mpfr_max(out.hi_mut(), out.hi(), t, MPFR_RNDU);
    mpfr_clear(t);
    return out;
  }
  bool positive = x.is_positive();
  mpfr_cosh(out.lo_mut(), positive ? x.lo() : x.hi(), MPFR_RNDD);
  mpfr_cosh(out.hi_mut(), positive ? x.hi() : x.lo(), MPFR_RNDU);
  return out;
}

inline CertInterval abs(const CertInterval& x) {
  if (mpfr_sgn(x.lo()) >= 0) return x;
  if (mpfr_sgn(x.hi()) <= 0) return -x;
  CertInterval out(x.bits());
  mpfr_set_zero(out.lo_mut(), 1);
  mpfr_t t;
  mpfr_init2(t, x.bits());
  mpfr_neg(t, x.lo(), MPFR_RNDU);
  mpfr_max(out.hi_mut(), x.hi(), t, MPFR_RNDU);
  mpfr_clear(t);
  return out;
}

inline CertInterval square(const CertInterval& x) {
  CertInterval a = abs(x);
  CertInterval out(x.bits());
  mpfr_sqr(out.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_sqr(out.hi_mut(), a.hi(), MPFR_RNDU);
  return out;
}

/// x^p for an integer p; p < 0 requires x bounded away from 0.
inline CertInterval pow_int(const CertInterval& x, long p) {
  if (p == 0) return CertInterval::exact(1L, x.bits());
  if (p < 0) return CertInterval::exact(1L, x.bits()) / pow_int(x, -p);
  if (p % 2 == 0) {
    CertInterval a = abs(x);
    CertInterval out(x.bits());
    mpfr_pow_ui(out.lo_mut(), a.lo(), static_cast<unsigned long>(p), MPFR_RNDD);
    mpfr_pow_ui(out.hi_mut(), a.hi(), static_cast<unsigned long>(p), MPFR_RNDU);
    return out;
  }
  CertInterval out(x.bits());
  mpfr_pow_ui(out.lo_mut(), x.lo(), static_cast<unsigned long>(p), MPFR_RNDD);
  mpfr_pow_ui(out.hi_mut(), x.hi(), static_cast<unsigned long>(p), MPFR_RNDU);
  return out;
}

/// x^y for an exact rational y. Non-integer y requires lo(x) > 0.
inline CertInterval pow(const CertInterval& x, const Rational& y) {
  if (y.get_den() == 1 && y.get_num().fits_slong_p()) return pow_int(x, y.get_num().get_si());
  if (mpfr_sgn(x.lo()) <= 0) throw DomainError("non-integer power of an interval not bounded away from 0");
  const BigInt& num = y.get_num();
  const BigInt& den = y.get_den();
  if (!num.fits_slong_p() || !den.fits_ulong_p()) {
    return exp(CertInterval::exact(y, x.bits()) * log(x));
  }
  long p = num.get_si();
  unsigned long q = den.get_ui();
  CertInterval out(x.bits());
  mpfr_t root;
  mpfr_init2(root, x.bits());
  if (p > 0) {
    mpfr_rootn_ui(root, x.lo(), q, MPFR_RNDD);
    mpfr_pow_si(out.lo_mut(), root, p, MPFR_RNDD);
    mpfr_rootn_ui(root, x.hi(), q, MPFR_RNDU);
    mpfr_pow_si(out.hi_mut(), root, p, MPFR_RNDU);
  } else {
    mpfr_rootn_ui(root, x.hi(), q, MPFR_RNDU);
    mpfr_pow_si(out.lo_mut(), root, p, MPFR_RNDD);
    mpfr_rootn_ui(root, x.lo(), q, MPFR_RNDD);
    mpfr_pow_si(out.hi_mut(), root, p, MPFR_RNDU);
  }
  mpfr_clear(root);
  return out;
}

/// x^y for an interval exponent; requires lo(x) > 0.
inline CertInterval pow(const CertInterval& x, const CertInterval& y) { return exp(y * log(x)); }

/// 2^e for a rational e; exact when e is a small non-negative integer.
inline CertInterval pow2(const Rational& e, Precision bits) {
  if (e.get_den() == 1 && e >= 0 && e.get_num().fits_ulong_p()) {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, e.get_num().get_ui());
    return CertInterval::exact(v, bits);
  }
  return exp(CertInterval::exact(e, bits) * CertInterval::log2(bits));
}

/// Enclosures of cos(pi t) and sin(pi t) for an exact rational t.
///
/// t is reduced exactly to s in [0, 1/2] with tracked signs, so the only
/// transcendental evaluation happens on an argument inside [0, pi/2] where
/// sin is increasing and cos decreasing.
struct UnitPhase {
  CertInterval cos;
  CertInterval sin;
};

inline UnitPhase cos_sin_pi(const Rational& t, Precision bits) {
  // s = t mod 2 in [0, 2)
  BigInt q;
  Rational half_t = t / 2;
  mpz_fdiv_q(q.get_mpz_t(), half_t.get_num_mpz_t(), half_t.get_den_mpz_t());
  Rational s = t - 2 * Rational(q);
  bool flip_cos = false;
  bool flip_sin = false;
  if (s >= 1) {
    s -= 1;
    flip_cos = !flip_cos;
    flip_sin = !flip_sin;
  }
  if (s > Rational(1, 2)) {
    s = 1 - s;
    flip_cos = !flip_cos;
  }
  CertInterval c(bits), sn(bits);
  if (s == 0) {
    c = CertInterval::exact(1L, bits);
    sn = CertInterval::exact(0L, bits);
  } else if (s == Rational(1, 2)) {
    c = CertInterval::exact(0L, bits);
    sn = CertInterval::exact(1L, bits);
  } else {
    CertInterval pi = CertInterval::pi(bits);
    CertInterval x = pi * s;
    mpfr_cos(c.lo_mut(), x.hi(), MPFR_RNDD);
    mpfr_cos(c.hi_mut(), x.lo(), MPFR_RNDU);
    mpfr_t half_pi;
    mpfr_init2(half_pi, bits);
    mpfr_div_2ui(half_pi, pi.lo(), 1, MPFR_RNDD);
    mpfr_sin(sn.lo_mut(), x.lo(), MPFR_RNDD);
    if (mpfr_less_p(x.hi(), half_pi)) {
      mpfr_sin(sn.hi_mut(), x.hi(), MPFR_RNDU);
    } else {
      mpfr_t t2;
      mpfr_init2(t2, bits);
      mpfr_sin(t2, x.hi(), MPFR_RNDD);
      mpfr_min(sn.lo_mut(), sn.lo(), t2, MPFR_RNDD);
      mpfr_set_ui(sn.hi_mut(), 1, MPFR_RNDU);
      mpfr_clear(t2);
    }
    mpfr_clear(half_pi);
  }
  if (flip_cos) c = -c;
  if (flip_sin) sn = -sn;
  return {std::move(c), std::move(sn)};
}

enum class Elementary { Exp, Log, Sinh, Cosh, Pow };

/// Single entry point over the elementary functions used by the verifiers.
inline CertInterval eval_elementary(Elementary kind, const CertInterval& x,
                                    const std::optional<Rational>& exponent, Precision bits) {
  CertInterval arg = x.with_bits(std::max(bits, x.bits()));
  switch (kind) {
    case Elementary::Exp: return exp(arg);
    case Elementary::Log: return log(arg);
    case Elementary::Sinh: return sinh(arg);
    case Elementary::Cosh: return cosh(arg);
    case Elementary::Pow:
      if (!exponent) throw DomainError("pow requires an exponent");
      return pow(arg, *exponent);
  }
  throw DomainError("unknown elementary function");
}

/// Smallest integer >= every point of x, if that integer is the same for both
/// endpoints; otherwise the ceiling cannot be certified at this precision.
inline std::optional<BigInt> certified_ceil(const CertInterval& x) {
  if (!x.is_finite()) return std::nullopt;
  BigInt lo_c, hi_c;
  mpfr_t t;
  mpfr_init2(t, x.bits());
  mpfr_ceil(t, x.lo());
  mpfr_get_z(lo_c.get_mpz_t(), t, MPFR_RNDN);
  mpfr_ceil(t, x.hi());
  mpfr_get_z(hi_c.get_mpz_t(), t, MPFR_RNDN);
  mpfr_clear(t);
  // lo exactly an integer m while hi > m would put the true value in (m-?, ...]:
  // both endpoints must agree on the ceiling.
  if (lo_c != hi_c) return std::nullopt;
  return lo_c;
}

/// Floor-safe integer recovery: the unique integer in x, if exactly one.
inline std::optional<BigInt> unique_integer(const CertInterval& x) {
  if (!x.is_finite()) return std::nullopt;
  BigInt lo_c, hi_f;
  mpfr_t t;
  mpfr_init2(t, x.bits());
  mpfr_ceil(t, x.lo());
  mpfr_get_z(lo_c.get_mpz_t(), t, MPFR_RNDN);
  mpfr_floor(t, x.hi());
  mpfr_get_z(hi_f.get_mpz_t(), t, MPFR_RNDN);
  mpfr_clear(t);
  if (lo_c != hi_f) return std::nullopt;
  return lo_c;
}

/// Results that can be refined by raising precision expose this.
template <class R>
concept Refinable = requires(const R& r) {
  { r.undetermined() } -> std::convertible_to<bool>;
};

inline bool is_undetermined(Verdict v) { return v == Verdict::Undetermined; }
inline bool is_undetermined(Tri t) { return t == Tri::Undetermined; }
template <Refinable R>
bool is_undetermined(const R& r) {
  return r.undetermined();
}

/// Runs fn(bits) starting at `start`, doubling on Undetermined up to `cap`.
template <class Fn>
auto refine(Fn&& fn, Precision start = kStartBits, Precision cap = kCapBits) {
  Precision bits = start;
  for (;;) {
    auto result = fn(bits);
    if (!is_undetermined(result) || bits >= cap) return result;
    bits = std::min<Precision>(bits * 2, cap);
  }
}

}  // namespace opart
