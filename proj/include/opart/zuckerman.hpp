#pragma once

// Truncated Zuckerman series for pbar(n), Engel's remainder bound, exact
// recovery by rounding, and the main-term split pbar = T (1 + R/T).

#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "opart/certified_arith.hpp"
#include "opart/errors.hpp"
#include "opart/overpartition.hpp"

namespace opart {

/// omega(h,k) = exp(pi i t). t is kept exact and reduced into (-1, 1].
struct RationalPhase {
  Rational t;
  unsigned long h = 0;
  unsigned long k = 1;
};

/// Brings t into (-1, 1] by subtracting an even integer.
inline Rational reduce_phase(const Rational& t) {
  Rational half = (t + 1) / 2;
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
  Rational out = t - 2 * Rational(q - 1);
  // out lies in (-1, 1] by construction of the ceiling.
  return out;
}

/// t(h,k) = sum_{r=1}^{k-1} (r/k) (hr/k - floor(hr/k) - 1/2)
///        = sum r (hr mod k) / k^2 - (k-1)/4.
inline RationalPhase omega_phase(unsigned long h, unsigned long k) {
  if (k == 0) throw DomainError("omega_phase needs k >= 1");
  BigInt acc = 0;
  for (unsigned long r = 1; r < k; ++r) {
    unsigned long long hr = static_cast<unsigned long long>(h % k) * r % k;
    acc += BigInt(static_cast<unsigned long>(r)) * static_cast<unsigned long>(hr);
  }
  BigInt k2 = BigInt(k) * k;
  Rational t = make_rational(acc, k2) - make_rational(BigInt(k - 1), 4);
  return {reduce_phase(t), h, k};
}

/// Phase of omega(h,k)^2 / omega(2h,k) * exp(-2 pi i n h / k), as a multiple of pi.
inline Rational term_phase(unsigned long n, unsigned long h, unsigned long k) {
  Rational t = 2 * omega_phase(h, k).t - omega_phase(2 * h, k).t -
               make_rational(BigInt(2) * n * h, BigInt(k));
  return reduce_phase(t);
}

/// d/dn (sinh(pi sqrt(n)/k) / sqrt(n)) = (pi/(2kn)) cosh(x) - sinh(x)/(2 n^{3/2}), x = pi sqrt(n)/k.
inline CertInterval sinh_ratio_derivative(unsigned long n, unsigned long k, Precision bits) {
  CertInterval nn = CertInterval::exact(long(n), bits);
  CertInterval sq = sqrt(nn);
  CertInterval pi = CertInterval::pi(bits);
  CertInterval x = pi * sq / long(k);
  CertInterval a = pi * cosh(x) / (2 * long(k) * nn);
  CertInterval b = sinh(x) / (2 * nn * sq);
  return a - b;
}

struct SeriesParts {
  CertInterval re;
  CertInterval im;
};

/// Real and imaginary parts of the truncated sum over odd k <= N, summed in
/// fixed (k, h) order.
inline SeriesParts series_parts(unsigned long n, unsigned long N, Precision bits) {
  if (n == 0) throw DomainError("the series is evaluated for n >= 1");
  if (N == 0) throw DomainError("truncation bound N must be >= 1");
  CertInterval re = CertInterval::exact(0L, bits);
  CertInterval im = CertInterval::exact(0L, bits);
  for (unsigned long k = 1; k <= N; k += 2) {
    CertInterval cre = CertInterval::exact(0L, bits);
    CertInterval cim = CertInterval::exact(0L, bits);
    for (unsigned long h = 0; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      UnitPhase ph = cos_sin_pi(term_phase(n, h, k), bits);
      cre += ph.cos;
      cim += ph.sin;
    }
    CertInterval scale = sqrt(CertInterval::exact(long(k), bits)) * sinh_ratio_derivative(n, k, bits);
    re += cre * scale;
    im += cim * scale;
  }
  CertInterval two_pi = CertInterval::pi(bits) * 2L;
  return {re / two_pi, im / two_pi};
}

/// Truncated series. The imaginary part must enclose 0; anything else is a phase bug.
inline CertInterval truncated_series(unsigned long n, unsigned long N, Precision bits) {
  SeriesParts p = series_parts(n, N, bits);
  if (!p.im.contains_zero()) throw std::logic_error("imaginary part of the series does not enclose 0");
  return p.re;
}

/// N^{5/2} / (pi n^{3/2}) * sinh(pi sqrt(n) / N).
inline CertInterval engel_error_bound(unsigned long n, unsigned long N, Precision bits) {
  if (n == 0 || N == 0) throw DomainError("engel_error_bound needs n, N >= 1");
  CertInterval nn = CertInterval::exact(long(n), bits);
  CertInterval NN = CertInterval::exact(long(N), bits);
  CertInterval pi = CertInterval::pi(bits);
  return pow(NN, Rational(5, 2)) / (pi * pow(nn, Rational(3, 2))) * sinh(pi * sqrt(nn) / NN);
}

struct SeriesEnclosure {
  unsigned long n = 0;
  unsigned long N = 0;
  CertInterval partial;
  CertInterval err;
  CertInterval total;
};

inline SeriesEnclosure certified_enclosure(unsigned long n, unsigned long N, Precision bits) {
  SeriesEnclosure out;
  out.n = n;
  out.N = N;
  out.partial = truncated_series(n, N, bits);
  out.err = engel_error_bound(n, N, bits);
  out.total = widen(out.partial, out.err);
  return out;
}

/// Smallest odd N with N >= 1.3 sqrt(n).
inline unsigned long recovery_truncation(unsigned long n) {
  unsigned long m = 1;
  while (100ULL * m * m < 169ULL * n) m += 2;
  return m;
}

/// pbar(n) recovered from the series alone. Raises WidthError while the
/// remainder bound is at least 1/2.
inline BigInt exact_from_series(unsigned long n, Precision bits = kStartBits) {
  if (n == 0) throw DomainError("exact_from_series needs n >= 1");
  unsigned long N = recovery_truncation(n);
  double log2_size = std::numbers::pi * std::sqrt(double(n)) / std::log(2.0);
  Precision work = std::max<Precision>(bits, static_cast<Precision>(log2_size) + 64);
  for (;;) {
    SeriesEnclosure enc = certified_enclosure(n, N, work);
    CertInterval half = CertInterval::exact(make_rational(1, 2), work);
    if (!mpfr_less_p(enc.err.hi(), half.lo())) {
      throw WidthError("remainder bound at N = " + std::to_string(N) + " is not below 1/2 for n = " +
                       std::to_string(n));
    }
    if (auto v = unique_integer(enc.total)) return *v;
    if (work >= kCapBits) throw WidthError("no unique integer in the enclosure at the precision cap");
    work = std::min<Precision>(work * 2, kCapBits);
  }
}

/// log T(n) = mu - log(8n) + log(1 - 1/mu) with mu = pi sqrt(n).
inline CertInterval log_main_term(unsigned long n, Precision bits) {
  if (n == 0) throw DomainError("main term needs n >= 1");
  CertInterval nn = CertInterval::exact(long(n), bits);
  CertInterval mu = CertInterval::pi(bits) * sqrt(nn);
  return mu - log(nn * 8L) + log(1L - 1L / mu);
}

/// T(n) = (1/8n)(1 - 1/mu) e^mu.
inline CertInterval main_term(unsigned long n, Precision bits) {
  if (n == 0) throw DomainError("main term needs n >= 1");
  CertInterval nn = CertInterval::exact(long(n), bits);
  CertInterval mu = CertInterval::pi(bits) * sqrt(nn);
  return (1L - 1L / mu) * exp(mu) / (nn * 8L);
}

struct MainTermSplit {
  unsigned long n = 0;
  CertInterval That;
  CertInterval Rhat;
};

inline MainTermSplit main_term_split(const OverpartitionTable& table, unsigned long n, Precision bits) {
  MainTermSplit out;
  out.n = n;
  out.That = main_term(n, bits);
  out.Rhat = CertInterval::exact(table.at(n), bits) - out.That;
  return out;
}

}  // namespace opart
