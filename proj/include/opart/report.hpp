#pragma once

// Report rows, summary tallies, and JSON / CSV rendering.

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "opart/certified_arith.hpp"
#include "opart/constants.hpp"

namespace opart {

using Json = nlohmann::ordered_json;

/// Decimal digits that faithfully render an endpoint at `bits`.
inline std::size_t digits_for(Precision bits) {
  return static_cast<std::size_t>(std::ceil(double(bits) * 0.30102999566398120)) + 2;
}

inline constexpr std::size_t kSummaryDigits = 20;

/// {"lo", "hi", "bits"}; endpoints rounded outward.
inline Json interval_json(const CertInterval& x, std::size_t digits = kSummaryDigits) {
  Json j;
  j["lo"] = x.lo_string(digits);
  j["hi"] = x.hi_string(digits);
  j["bits"] = x.bits();
  return j;
}

inline std::string rational_string(const Rational& q) { return q.get_str(); }

inline Json cutoff_json(const NamedCutoff& c) {
  Json j;
  j["name"] = c.name;
  if (c.value.is_integer()) {
    j["form"] = "integer";
    j["integer_or_ln"] = c.value.value().get_str();
  } else {
    j["form"] = "exp";
    j["integer_or_ln"] = interval_json(c.value.ln(), 30);
  }
  j["provenance"] = c.provenance;
  return j;
}

struct Row {
  std::size_t n = 0;
  Verdict verdict = Verdict::Undetermined;
  bool asserted = true;
  bool in_cutoff = true;
  Precision bits = kStartBits;
  std::optional<CertInterval> value, bound_lo, bound_hi;
  Json extra = Json::object();
};

struct Tally {
  std::size_t holds = 0, fails = 0, undetermined = 0;
  void add(Verdict v) {
    if (v == Verdict::Holds) ++holds;
    else if (v == Verdict::Fails) ++fails;
    else ++undetermined;
  }
};

struct Report {
  std::string command;
  Json parameters = Json::object();
  std::vector<Row> rows;
  Json notes = Json::object();
  std::optional<double> runtime_seconds;

  Tally summary() const {
    Tally t;
    for (const auto& r : rows) t.add(r.verdict);
    return t;
  }
  Tally asserted_summary() const {
    Tally t;
    for (const auto& r : rows)
      if (r.asserted) t.add(r.verdict);
    return t;
  }
  Precision precision_used() const {
    Precision p = kStartBits;
    for (const auto& r : rows) p = std::max(p, r.bits);
    return p;
  }

  /// 0 clean, 1 an asserted Fails, 3 only asserted Undetermined.
  int exit_code() const {
    Tally a = asserted_summary();
    if (a.fails) return 1;
    if (a.undetermined) return 3;
    return 0;
  }

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["parameters"] = parameters;
    Tally s = summary(), a = asserted_summary();
    j["summary"] = {{"holds", s.holds}, {"fails", s.fails}, {"undetermined", s.undetermined}};
    j["asserted"] = {{"holds", a.holds}, {"fails", a.fails}, {"undetermined", a.undetermined}};
    j["precision_used"] = precision_used();
    if (!notes.empty()) j["notes"] = notes;
    if (runtime_seconds) j["runtime_seconds"] = *runtime_seconds;
    Json rows_json = Json::array();
    for (const auto& r : rows) {
      // failing rows carry endpoints at full working precision
      std::size_t d = r.verdict == Verdict::Fails ? digits_for(r.bits) : kSummaryDigits;
      Json row;
      row["n"] = r.n;
      row["verdict"] = to_string(r.verdict);
      row["asserted"] = r.asserted;
      row["in_cutoff"] = r.in_cutoff;
      row["bits"] = r.bits;
      if (r.value) row["value"] = interval_json(*r.value, d);
      if (r.bound_lo) row["bound_lo"] = interval_json(*r.bound_lo, d);
      if (r.bound_hi) row["bound_hi"] = interval_json(*r.bound_hi, d);
      for (auto it = r.extra.begin(); it != r.extra.end(); ++it) row[it.key()] = it.value();
      rows_json.push_back(std::move(row));
    }
    j["rows"] = std::move(rows_json);
    return j;
  }

  /// n,value_lo,value_hi,bound_lo,bound_hi; bounds are the lower end of
  /// bound_lo and the upper end of bound_hi.
  void write_csv(std::ostream& os) const {
    os << "n,value_lo,value_hi,bound_lo,bound_hi\n";
    for (const auto& r : rows) {
      os << r.n << ',';
      os << (r.value ? r.value->lo_string(kSummaryDigits) : "") << ',';
      os << (r.value ? r.value->hi_string(kSummaryDigits) : "") << ',';
      os << (r.bound_lo ? r.bound_lo->lo_string(kSummaryDigits) : "") << ',';
      os << (r.bound_hi ? r.bound_hi->hi_string(kSummaryDigits) : "") << '\n';
    }
  }
};

}  // namespace opart
