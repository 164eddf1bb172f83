// Command-line front end: table cache, series enclosures, differences,
// verification campaigns, scans and the constants dump.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opart/opart.hpp"

namespace fs = std::filesystem;
using namespace opart;

namespace {

constexpr int kExitUsage = 2;

struct Common {
  std::string cache;
  std::string out;
  std::string csv;
  unsigned threads = default_threads();
  bool timing = false;
  std::size_t cap = kDefaultTableCap;
};

void add_common(CLI::App* app, Common& c, bool ranged) {
  app->add_option("--cache", c.cache, "table cache file (overrides OPART_CACHE_DIR)");
  app->add_option("--out", c.out, "write the JSON report here instead of stdout");
  app->add_option("--table-cap", c.cap, "largest table index allowed");
  if (ranged) {
    app->add_option("--csv", c.csv, "also write n,value_lo,value_hi,bound_lo,bound_hi rows");
    app->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  }
  app->add_flag("--timing", c.timing, "include wall-clock runtime in the report");
}

std::optional<fs::path> cache_path(const Common& c) {
  if (!c.cache.empty()) return fs::path(c.cache);
  if (const char* dir = std::getenv("OPART_CACHE_DIR"); dir && *dir) return fs::path(dir) / "pbar.tsv";
  return std::nullopt;
}

OverpartitionTable table_for(const Common& c, std::size_t max_n) {
  return load_or_build(max_n, cache_path(c), c.cap);
}

void emit(const Json& j, const Common& c) {
  std::string text = j.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
    if (!f) throw ResourceError("cannot write " + c.out);
    f << text;
  }
}

int emit_report(Report& rep, const Common& c, double seconds) {
  if (c.timing) rep.runtime_seconds = seconds;
  emit(rep.to_json(), c);
  if (!c.csv.empty()) {
    std::ofstream f(c.csv, std::ios::binary | std::ios::trunc);
    if (!f) throw ResourceError("cannot write " + c.csv);
    rep.write_csv(f);
  }
  if (!c.out.empty()) {
    Tally s = rep.summary();
    std::cerr << rep.command << ": holds " << s.holds << ", fails " << s.fails << ", undetermined "
              << s.undetermined << "\n";
  }
  return rep.exit_code();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified computations for overpartitions and the roots r_alpha(n)"};
  app.require_subcommand(1);
  Common common;
  std::string alpha_text = "0";
  unsigned r = 2;
  std::size_t from = 1, to = 1;

  auto* table = app.add_subcommand("table", "build the exact table and write the cache");
  std::size_t table_max = 0;
  table->add_option("--max", table_max, "largest n")->required();
  add_common(table, common, false);

  auto* enclose = app.add_subcommand("enclose", "truncated series with its remainder bound");
  unsigned long enc_n = 1, enc_N = 1;
  Precision enc_bits = kStartBits;
  enclose->add_option("--n", enc_n)->required()->check(CLI::PositiveNumber);
  enclose->add_option("--N", enc_N, "truncation (odd k <= N)")->required()->check(CLI::PositiveNumber);
  enclose->add_option("--bits", enc_bits)->check(CLI::Range(64, int(kCapBits)));
  add_common(enclose, common, false);

  auto* diff = app.add_subcommand("diff", "(-1)^r Delta^r log r_alpha(n) with its H and G parts");
  std::size_t diff_n = 1;
  diff->add_option("--n", diff_n)->required()->check(CLI::PositiveNumber);
  diff->add_option("--r", r)->check(CLI::Range(1, 64));
  diff->add_option("--alpha", alpha_text);
  add_common(diff, common, false);

  auto* verify = app.add_subcommand("verify", "certified range check of one bound");
  std::string kind;
  std::string b6 = "corrected";
  verify->add_option("kind", kind)->required()->check(CLI::IsMember(verify_kinds()));
  verify->add_option("--from", from)->required();
  verify->add_option("--to", to)->required();
  verify->add_option("--r", r)->check(CLI::Range(1, 64));
  verify->add_option("--alpha", alpha_text);
  verify->add_option("--b6", b6, "s- coefficient b6: corrected or printed")
      ->check(CLI::IsMember({"corrected", "printed"}));
  add_common(verify, common, true);

  auto* scan = app.add_subcommand("scan", "exploratory scan: turan or convexity");
  std::string what;
  scan->add_option("what", what)->required()->check(CLI::IsMember({"turan", "convexity"}));
  scan->add_option("--from", from)->required();
  scan->add_option("--to", to)->required();
  scan->add_option("--alpha", alpha_text);
  add_common(scan, common, true);

  auto* asym = app.add_subcommand("asymptote", "n^{r+1/2} (-1)^r Delta^r log r_alpha(n) at given points");
  std::vector<std::size_t> points;
  asym->add_option("--r", r)->check(CLI::Range(2, 64));
  asym->add_option("--alpha", alpha_text);
  asym->add_option("--points", points)->required()->delimiter(',');
  add_common(asym, common, false);

  auto* consts = app.add_subcommand("constants", "dump the named constants and cutoffs");
  consts->add_option("--r", r)->check(CLI::Range(2, 64));
  consts->add_option("--alpha", alpha_text);
  add_common(consts, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    Rational alpha = parse_rational(alpha_text);
    if (alpha < 0) throw DomainError("--alpha must be non-negative");
    CampaignParams p;
    p.from = from;
    p.to = to;
    p.r = r;
    p.alpha = alpha;
    p.b6 = b6 == "printed" ? B6Variant::AsPrinted : B6Variant::Corrected;
    p.threads = common.threads;

    if (table->parsed()) {
      auto path = cache_path(common);
      OverpartitionTable t = load_or_build(table_max, path, common.cap);
      Json j;
      j["command"] = "table";
      j["max"] = table_max;
      j["cache"] = path ? Json(path->string()) : Json(nullptr);
      j["pbar_max_digits"] = t.at(table_max).get_str().size();
      if (common.timing) j["runtime_seconds"] = seconds_since(t0);
      emit(j, common);
      return 0;
    }
    if (enclose->parsed()) {
      SeriesEnclosure e = certified_enclosure(enc_n, enc_N, enc_bits);
      Json j;
      j["command"] = "enclose";
      j["n"] = enc_n;
      j["N"] = enc_N;
      j["partial"] = interval_json(e.partial);
      j["error_bound"] = interval_json(e.err);
      j["enclosure"] = interval_json(e.total);
      if (enc_n <= kDefaultTableCap) {
        OverpartitionTable t = table_for(common, enc_n);
        j["exact"] = t.at(enc_n).get_str();
        j["contains_exact"] = e.total.contains(t.at(enc_n));
      }
      if (common.timing) j["runtime_seconds"] = seconds_since(t0);
      emit(j, common);
      return 0;
    }
    if (diff->parsed()) {
      OverpartitionTable t = table_for(common, diff_n + r);
      Json j;
      j["command"] = "diff";
      j["n"] = diff_n;
      j["r"] = r;
      j["alpha"] = rational_string(alpha);
      DiffValue d = signed_diff_log(t, diff_n, r, alpha, kStartBits);
      HGParts hg = hg_parts(t, diff_n, r, alpha, kStartBits);
      j["value"] = interval_json(d.value);
      j["H"] = interval_json(hg.H);
      j["G"] = interval_json(hg.G);
      // both enclose the same real number, so the enclosures must overlap
      j["H_plus_G_overlaps_value"] = tri_compare(hg.H + hg.G, d.value) == Tri::Undetermined;
      if (common.timing) j["runtime_seconds"] = seconds_since(t0);
      emit(j, common);
      return 0;
    }
    if (verify->parsed()) {
      std::size_t extent = table_extent(kind, p);
      OverpartitionTable t = extent ? table_for(common, extent) : OverpartitionTable();
      Report rep = run_verify(kind, p, t);
      return emit_report(rep, common, seconds_since(t0));
    }
    if (scan->parsed()) {
      OverpartitionTable t = table_for(common, table_extent("scan-" + what, p));
      Report rep = run_scan(what, p, t);
      return emit_report(rep, common, seconds_since(t0));
    }
    if (asym->parsed()) {
      std::size_t mx = 0;
      for (auto n : points) mx = std::max(mx, n);
      OverpartitionTable t = table_for(common, mx + r);
      AsymptoteScan s = asymptote_scan(t, r, alpha, points);
      CutoffValue cut = cutoff_set(r, alpha).N_r_alpha;
      Report rep;
      rep.command = "asymptote";
      rep.parameters = {{"r", r}, {"alpha", rational_string(alpha)}, {"points", points}};
      rep.notes["limit"] = interval_json(s.limit);
      rep.notes["cutoff"] = cut.to_string();
      for (const auto& pt : s.points) {
        SandwichReport sw = verify_theorem14(t, pt.n, r, alpha, cut);
        CertInterval scale = pow(CertInterval::exact(long(pt.n), kStartBits), Rational(2 * r + 1, 2));
        Row row;
        row.n = pt.n;
        row.value = pt.scaled;
        row.bits = sw.bits;
        row.in_cutoff = sw.in_cutoff;
        row.asserted = sw.in_cutoff;
        row.verdict = sw.verdict;
        if (sw.inner.is_positive()) row.bound_lo = sw.lower * scale;
        row.bound_hi = sw.upper * scale;
        row.extra["distance_to_limit"] = interval_json(abs(pt.scaled - s.limit));
        rep.rows.push_back(std::move(row));
      }
      return emit_report(rep, common, seconds_since(t0));
    }
    if (consts->parsed()) {
      CutoffSet cs = cutoff_set(r, alpha);
      TuranCutoffSet ts = turan_cutoff_set(alpha);
      Json j;
      j["command"] = "constants";
      j["r"] = r;
      j["alpha"] = rational_string(alpha);
      j["values"] = {{"N0(2r+2)", interval_json(cs.N0_2r2)},
                     {"S_r", cs.S_r.get_str()},
                     {"C(r)", interval_json(cs.C_r)},
                     {"C(r,alpha)", interval_json(cs.C_r_alpha)},
                     {"C2(r).weight1", interval_json(cs.C2_r_single)},
                     {"C2(r).weight2", interval_json(cs.C2_r_double)}};
      Json cut = Json::array();
      for (const auto& e : cs.entries()) cut.push_back(cutoff_json(e));
      j["cutoffs"] = cut;
      Json tur = Json::array();
      for (const auto& e : ts.entries()) tur.push_back(cutoff_json(e));
      j["turan_cutoffs"] = tur;
      if (common.timing) j["runtime_seconds"] = seconds_since(t0);
      emit(j, common);
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IndexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
