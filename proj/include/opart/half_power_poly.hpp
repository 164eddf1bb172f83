#pragma once

// Finite sums  sum_i c_i * n^{-e_i} * (log n)^{l_i}  with exact rational
// exponents and interval coefficients. All bound functions of the reverse
// Turan argument are data of this shape.

#include <string>
#include <utility>
#include <vector>

#include "opart/certified_arith.hpp"

namespace opart {

struct PolyTerm {
  Rational exponent;     // power of 1/n
  unsigned log_power = 0;
  std::string tag;       // identifies the source coefficient; used for exact cancellation
  CertInterval coeff;
};

inline bool same_term(const PolyTerm& a, const PolyTerm& b) {
  return a.exponent == b.exponent && a.log_power == b.log_power && a.tag == b.tag &&
         mpfr_equal_p(a.coeff.lo(), b.coeff.lo()) && mpfr_equal_p(a.coeff.hi(), b.coeff.hi());
}

class HalfPowerPoly {
 public:
  HalfPowerPoly() = default;

  HalfPowerPoly& add(const Rational& exponent, CertInterval coeff, unsigned log_power = 0, std::string tag = {}) {
    terms_.push_back({exponent, log_power, std::move(tag), std::move(coeff)});
    return *this;
  }

  const std::vector<PolyTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  const PolyTerm* find(const std::string& tag) const {
    for (const auto& t : terms_)
      if (t.tag == tag) return &t;
    return nullptr;
  }

  /// Direct evaluation for an enclosure of n (lo(n) >= 1).
  CertInterval evaluate(const CertInterval& n) const {
    Precision bits = n.bits();
    CertInterval sum = CertInterval::exact(0L, bits);
    CertInterval logn = log(n);
    for (const auto& t : terms_) {
      CertInterval v = t.coeff;
      if (t.exponent != 0) v = v * pow(n, Rational(-t.exponent));
      if (t.log_power) v = v * pow_int(logn, t.log_power);
      sum += v;
    }
    return sum;
  }

  CertInterval evaluate(long n, Precision bits) const { return evaluate(CertInterval::exact(n, bits)); }
  CertInterval evaluate(const BigInt& n, Precision bits) const { return evaluate(CertInterval::exact(n, bits)); }

  HalfPowerPoly operator-() const {
    HalfPowerPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  /// Difference with exact cancellation of terms that are the same object on
  /// both sides (same exponent, log power, tag and endpoints).
  friend HalfPowerPoly operator-(const HalfPowerPoly& a, const HalfPowerPoly& b) {
    HalfPowerPoly out;
    std::vector<bool> used(b.terms_.size(), false);
    for (const auto& ta : a.terms_) {
      bool cancelled = false;
      for (std::size_t j = 0; j < b.terms_.size(); ++j) {
        if (!used[j] && same_term(ta, b.terms_[j])) {
          used[j] = true;
          cancelled = true;
          break;
        }
      }
      if (!cancelled) out.terms_.push_back(ta);
    }
    for (std::size_t j = 0; j < b.terms_.size(); ++j) {
      if (used[j]) continue;
      PolyTerm t = b.terms_[j];
      t.coeff = -t.coeff;
      out.terms_.push_back(std::move(t));
    }
    return out;
  }

  friend HalfPowerPoly operator+(const HalfPowerPoly& a, const HalfPowerPoly& b) {
    HalfPowerPoly out = a;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    return out;
  }

  /// Sign of the sum at n = e^L for an enclosure L of log n, working with
  /// logarithms of the individual terms so that n itself never materializes.
  /// Greater means certified positive, Less certified negative.
  Tri sign_log_domain(const CertInterval& L) const {
    Precision bits = L.bits();
    if (!L.is_positive()) return Tri::Undetermined;
    CertInterval logL = log(L);
    std::vector<CertInterval> pos, neg;
    for (const auto& t : terms_) {
      if (t.coeff.is_point() && mpfr_zero_p(t.coeff.lo())) continue;
      if (t.coeff.contains_zero()) return Tri::Undetermined;
      CertInterval lam = log(abs(t.coeff)) - CertInterval::exact(t.exponent, bits) * L;
      if (t.log_power) lam = lam + logL * long(t.log_power);
      (t.coeff.is_positive() ? pos : neg).push_back(std::move(lam));
    }
    if (pos.empty() && neg.empty()) return Tri::Undetermined;
    if (neg.empty()) return Tri::Greater;
    if (pos.empty()) return Tri::Less;
    return tri_compare(log_sum_exp(pos), log_sum_exp(neg));
  }

  /// Sign of the sum at an exact integer n, evaluated directly.
  Tri sign_at(const BigInt& n, Precision bits) const {
    return tri_compare(evaluate(n, bits), CertInterval::exact(0L, bits));
  }

  /// log of the sum at n = e^L when every coefficient is positive.
  static CertInterval log_sum_exp(const std::vector<CertInterval>& xs) {
    Precision bits = xs.front().bits();
    // any reference point is valid; the largest lower endpoint keeps exp() in range
    CertInterval ref = CertInterval::from_endpoints(xs.front().lo(), xs.front().lo(), bits);
    for (const auto& x : xs)
      if (mpfr_greater_p(x.lo(), ref.lo())) ref = CertInterval::from_endpoints(x.lo(), x.lo(), bits);
    CertInterval s = CertInterval::exact(0L, bits);
    for (const auto& x : xs) s += exp(x - ref);
    return ref + log(s);
  }

 private:
  std::vector<PolyTerm> terms_;
};

}  // namespace opart
