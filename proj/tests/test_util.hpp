#pragma once

#include <string>

#include "opart/opart.hpp"
#include "goldens.hpp"

namespace testutil {

using namespace opart;

inline Rational golden_q(const char* g) { return parse_rational(g); }
inline BigInt golden_z(const char* g) { return BigInt(g); }

inline Rational ten_to_minus(int k) { return Rational(BigInt(1), BigInt("1" + std::string(k, '0'))); }

/// x overlaps the golden decimal widened by 10^-digits relative (goldens carry ~40 digits).
inline bool matches_golden(const CertInterval& x, const char* g, int digits = 30) {
  Precision bits = std::max<Precision>(x.bits(), 256);
  CertInterval gv = CertInterval::exact(golden_q(g), bits);
  CertInterval radius = abs(gv) * CertInterval::exact(ten_to_minus(digits), bits) +
                        CertInterval::exact(ten_to_minus(60), bits);
  return tri_compare(x, widen(gv, radius)) == Tri::Undetermined;
}

/// One shared table for the whole test binary.
inline const OverpartitionTable& table6k() {
  static const OverpartitionTable t = build_table(6010);
  return t;
}

}  // namespace testutil
