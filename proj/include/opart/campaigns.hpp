#pragma once

// Range campaigns that turn checks into report rows. Shared by the CLI and
// the acceptance harness.

#include <cstddef>
#include <string>
#include <vector>

#include "opart/constants.hpp"
#include "opart/difference_bounds.hpp"
#include "opart/overpartition.hpp"
#include "opart/report.hpp"
#include "opart/scan.hpp"
#include "opart/turan.hpp"

namespace opart {

struct CampaignParams {
  std::size_t from = 1;
  std::size_t to = 1;
  unsigned r = 2;
  Rational alpha = 0;
  B6Variant b6 = B6Variant::Corrected;
  unsigned threads = default_threads();
};

inline const std::vector<std::string>& verify_kinds() {
  static const std::vector<std::string> k{"lemma21", "lemma24", "theorem14", "lemma31", "lemma32",
                                          "lemma33", "lemma34", "theorem35", "identity", "turan"};
  return k;
}

/// Largest table index a campaign touches.
inline std::size_t table_extent(const std::string& kind, const CampaignParams& p) {
  if (kind == "lemma21" || kind == "theorem14") return p.to + p.r;
  if (kind == "lemma31") return p.to + 1;
  if (kind == "theorem35" || kind == "turan" || kind == "scan-turan") return p.to + 2;
  if (kind == "scan-convexity") return p.to + 3;
  if (kind == "lemma24" || kind == "lemma33" || kind == "identity") return 0;
  return p.to;
}

inline Json params_json(const std::string& kind, const CampaignParams& p) {
  Json j;
  j["kind"] = kind;
  j["from"] = p.from;
  j["to"] = p.to;
  if (kind == "lemma21" || kind == "lemma24" || kind == "theorem14") j["r"] = p.r;
  if (kind != "lemma21" && kind != "lemma31" && kind != "lemma32" && kind != "lemma34")
    j["alpha"] = rational_string(p.alpha);
  if (kind == "lemma32") j["b6"] = p.b6 == B6Variant::Corrected ? "corrected" : "printed";
  return j;
}

inline Row row_from(const BoundCheck& c, bool asserted) {
  Row r;
  r.n = c.n;
  r.verdict = c.verdict;
  r.asserted = asserted;
  r.in_cutoff = c.in_cutoff;
  r.bits = c.bits;
  r.value = c.value;
  r.bound_lo = c.bound_lo;
  r.bound_hi = c.bound_hi;
  return r;
}

/// Log-convexity of r_alpha at n is asserted from n = 4 (alpha = 0), n = 19
/// (alpha = 1), and from N(2, alpha) otherwise.
inline CutoffValue convexity_start(const Rational& alpha) {
  if (alpha == 0) return CutoffValue(BigInt(4));
  if (alpha == 1) return CutoffValue(BigInt(19));
  return cutoff_set(2, alpha).N_r_alpha;
}

inline Report run_verify(const std::string& kind, const CampaignParams& p, const OverpartitionTable& t) {
  if (p.to < p.from) throw DomainError("empty range: --to is below --from");
  Report rep;
  rep.command = "verify " + kind;
  rep.parameters = params_json(kind, p);
  auto map = [&](auto fn) { return parallel_map(p.from, p.to, fn, p.threads); };

  if (kind == "lemma21") {
    rep.notes["cutoff"] = N1_cutoff(p.r).to_string();
    rep.rows = map([&](std::size_t n) {
      BoundCheck c = lemma21_check(t, n, p.r, HypothesisPolicy::Record);
      return row_from(c, c.in_cutoff);
    });
  } else if (kind == "lemma24") {
    if (p.r < 2) throw DomainError("lemma24 needs --r >= 2");
    rep.notes["cutoff"] = lemma24_cutoff(p.r).get_str();
    rep.rows = map([&](std::size_t n) {
      BoundCheck c = lemma24_check(n, p.r, p.alpha, HypothesisPolicy::Record);
      return row_from(c, c.in_cutoff);
    });
  } else if (kind == "theorem14") {
    if (p.r < 2) throw DomainError("theorem14 needs --r >= 2");
    CutoffValue cut = cutoff_set(p.r, p.alpha).N_r_alpha;
    rep.notes["cutoff"] = cut.to_string();
    rep.rows = map([&](std::size_t n) {
      SandwichReport s = verify_theorem14(t, n, p.r, p.alpha, cut);
      Row r;
      r.n = n;
      r.verdict = s.verdict;
      r.asserted = s.in_cutoff;
      r.in_cutoff = s.in_cutoff;
      r.bits = s.bits;
      r.value = s.value;
      if (s.inner.is_positive()) r.bound_lo = s.lower;
      r.bound_hi = s.upper;
      r.extra["inner"] = interval_json(s.inner);
      return r;
    });
  } else if (kind == "lemma31" || kind == "lemma32") {
    Side side = kind == "lemma31" ? Side::Plus : Side::Minus;
    rep.rows = map([&](std::size_t n) { return row_from(s_bounds_check(t, n, side, p.b6), true); });
  } else if (kind == "lemma33") {
    CutoffValue cut = ntilde(p.alpha);
    rep.notes["cutoff"] = cut.to_string();
    rep.rows = map([&](std::size_t n) {
      BoundCheck c = power_quotient_check(n, p.alpha, HypothesisPolicy::Record);
      return row_from(c, c.in_cutoff);
    });
  } else if (kind == "lemma34") {
    rep.rows = map([&](std::size_t n) { return row_from(pbar_power_check(t, n), true); });
  } else if (kind == "theorem35") {
    rep.notes["cutoff"] = ntilde(p.alpha).to_string();
    rep.rows = map([&](std::size_t n) {
      Theorem35Check c = theorem35_check(t, n, p.alpha, HypothesisPolicy::Record);
      Row r;
      r.n = n;
      r.verdict = c.verdict;
      r.asserted = c.in_cutoff;
      r.in_cutoff = c.in_cutoff;
      r.bits = c.bits;
      r.value = c.u_n;
      r.bound_lo = c.L;
      r.bound_hi = c.U;
      r.extra["u_next"] = interval_json(c.u_n1);
      r.extra["L1"] = interval_json(c.L1);
      r.extra["U1"] = interval_json(c.U1);
      r.extra["verdicts"] = {to_string(c.lower), to_string(c.upper), to_string(c.lower1), to_string(c.upper1)};
      return r;
    });
  } else if (kind == "identity") {
    rep.rows = map([&](std::size_t n) {
      Precision bits = 256;
      MPolynomials m = m_polynomials(BigInt(static_cast<unsigned long>(n)), p.alpha, bits);
      Row r;
      r.n = n;
      r.bits = bits;
      r.verdict = m.identity_residual.contains(0L) ? Verdict::Holds : Verdict::Fails;
      r.value = m.identity_residual;
      r.extra["M1"] = interval_json(m.M1);
      r.extra["M2"] = interval_json(m.M2);
      r.extra["residual_width"] = m.identity_residual.width();
      return r;
    });
  } else if (kind == "turan") {
    CutoffValue cut = turan_cutoff_set(p.alpha).N_T;
    rep.notes["cutoff"] = cut.to_string();
    rep.notes["scope"] = "rows below the cutoff are exploratory; only the Jensen agreement is asserted there";
    rep.rows = map([&](std::size_t n) {
      TuranReport tr = reverse_turan_check(t, n, p.alpha, cut);
      Row r;
      r.n = n;
      r.bits = tr.bits;
      bool agree = (tr.cubic_class == CubicClass::OneRealTwoComplex) == (tr.verdict == Verdict::Holds) &&
                   tr.forms_agree && !(tr.amgm_applies && tr.verdict != Verdict::Holds);
      // below the cutoff only the agreement between formulations (and AM-GM) is claimed
      r.verdict = agree ? tr.verdict : Verdict::Fails;
      r.asserted = tr.in_cutoff || !agree;
      r.in_cutoff = tr.in_cutoff;
      r.value = tr.lhs;
      r.bound_hi = tr.rhs;
      r.extra["inequality"] = to_string(tr.verdict);
      r.extra["r_form"] = to_string(tr.r_form_verdict);
      r.extra["cubic_class"] = to_string(tr.cubic_class);
      r.extra["amgm_applies"] = tr.amgm_applies;
      return r;
    });
  } else {
    throw DomainError("unknown verify kind: " + kind);
  }
  return rep;
}

inline Report run_scan(const std::string& what, const CampaignParams& p, const OverpartitionTable& t) {
  if (p.to < p.from) throw DomainError("empty range: --to is below --from");
  if (what == "turan") {
    Report rep = run_verify("turan", p, t);
    rep.command = "scan turan";
    rep.parameters = params_json("scan-turan", p);
    for (const auto& r : rep.rows) {
      if (r.extra["inequality"] == "Holds") {
        rep.notes["first_holds"] = r.n;
        break;
      }
    }
    return rep;
  }
  if (what == "convexity") {
    Report rep;
    rep.command = "scan convexity";
    rep.parameters = params_json("scan-convexity", p);
    CutoffValue start = convexity_start(p.alpha);
    rep.notes["asserted_from"] = start.to_string();
    std::size_t from = std::max<std::size_t>(p.from, 2);
    rep.rows = parallel_map(from, p.to, [&](std::size_t n) {
      CorollaryChecks c = corollary_checks(t, n, p.alpha);
      Row r;
      r.n = n;
      r.verdict = c.convexity;
      r.in_cutoff = at_or_above(long(n), start);
      r.asserted = r.in_cutoff;
      r.value = signed_diff_log(t, n - 1, 2, p.alpha, kStartBits).value;
      r.extra["delta3_negative"] = to_string(c.delta3_negative);
      return r;
    }, p.threads);
    return rep;
  }
  throw DomainError("unknown scan: " + what);
}

}  // namespace opart
