#pragma once

// Exact overpartition counts and the scaled root sequence r_alpha(n).

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "opart/certified_arith.hpp"
#include "opart/errors.hpp"

namespace opart {

/// Largest index build_table accepts unless the caller raises the cap.
inline constexpr std::size_t kDefaultTableCap = 200000;
/// The enumeration oracle is quadratic; it is only meant for small n.
inline constexpr std::size_t kBruteforceLimit = 200;

class OverpartitionTable {
 public:
  OverpartitionTable() = default;
  explicit OverpartitionTable(std::vector<BigInt> values) : values_(std::move(values)) {
    if (values_.empty() || values_[0] != 1) throw FormatError("table must start with pbar(0) = 1");
  }

  std::size_t max_n() const { return values_.size() - 1; }
  bool covers(std::size_t n) const { return n < values_.size(); }
  bool empty() const { return values_.empty(); }

  const BigInt& at(std::size_t n) const {
    if (!covers(n)) {
      throw IndexError("table covers 0.." + std::to_string(values_.empty() ? 0 : max_n()) +
                       ", requested " + std::to_string(n));
    }
    return values_[n];
  }
  const BigInt& operator[](std::size_t n) const { return at(n); }
  const std::vector<BigInt>& values() const { return values_; }

  friend bool operator==(const OverpartitionTable&, const OverpartitionTable&) = default;

 private:
  std::vector<BigInt> values_;
};

/// pbar(n) = 2 * sum_{j>=1} (-1)^{j+1} pbar(n - j^2), from 1/phi(-q).
inline OverpartitionTable build_table(std::size_t max_n, std::size_t cap = kDefaultTableCap) {
  if (max_n > cap) {
    throw ResourceError("table size " + std::to_string(max_n) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<BigInt> v(max_n + 1);
  v[0] = 1;
  BigInt acc;
  for (std::size_t n = 1; n <= max_n; ++n) {
    acc = 0;
    for (std::size_t j = 1; j * j <= n; ++j) {
      if (j % 2 == 1) acc += v[n - j * j];
      else acc -= v[n - j * j];
    }
    v[n] = 2 * acc;
  }
  return OverpartitionTable(std::move(v));
}

/// Counts overpartitions of n by multiplying the factors
/// (1 + 2q^k + 2q^{2k} + ...) over part sizes k, truncated at q^n.
inline BigInt bruteforce_count(std::size_t n) {
  if (n > kBruteforceLimit) {
    throw ResourceError("bruteforce_count is limited to n <= " + std::to_string(kBruteforceLimit));
  }
  std::vector<BigInt> dp(n + 1);
  dp[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<BigInt> next = dp;
    for (std::size_t m = k; m <= n; ++m) {
      for (std::size_t used = k; used <= m; used += k) next[m] += 2 * dp[m - used];
    }
    dp = std::move(next);
  }
  return dp[n];
}

/// Writes "n<TAB>digits" lines for n = 0..max_n.
inline void write_cache(const OverpartitionTable& table, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ResourceError("cannot write cache " + tmp.string());
    for (std::size_t n = 0; n <= table.max_n(); ++n) out << n << '\t' << table.at(n).get_str() << '\n';
    if (!out) throw ResourceError("short write to cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline OverpartitionTable read_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot read cache " + path.string());
  std::vector<BigInt> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw FormatError("cache line " + std::to_string(lineno) + ": missing tab");
    std::string idx = line.substr(0, tab);
    std::string digits = line.substr(tab + 1);
    if (idx.empty() || digits.empty() ||
        idx.find_first_not_of("0123456789") != std::string::npos ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw FormatError("cache line " + std::to_string(lineno) + ": malformed record");
    }
    if (std::stoull(idx) != values.size()) {
      throw FormatError("cache line " + std::to_string(lineno) + ": indices must increase from 0");
    }
    values.emplace_back(digits, 10);
  }
  if (values.empty()) throw FormatError("cache " + path.string() + " is empty");
  return OverpartitionTable(std::move(values));
}

/// Reads the cache when it covers max_n; otherwise builds and rewrites it.
inline OverpartitionTable load_or_build(std::size_t max_n, const std::optional<std::filesystem::path>& cache,
                                        std::size_t cap = kDefaultTableCap) {
  if (cache && std::filesystem::exists(*cache)) {
    try {
      OverpartitionTable t = read_cache(*cache);
      if (t.covers(max_n)) return t;
    } catch (const FormatError&) {
      // rebuilt below
    }
  }
  OverpartitionTable t = build_table(max_n, cap);
  if (cache) write_cache(t, *cache);
  return t;
}

/// First n in [from, to] where pbar(n)^2 >= pbar(n-1) pbar(n+1) fails strictly,
/// or nullopt if strict log-concavity holds throughout.
inline std::optional<std::size_t> first_log_concavity_failure(const OverpartitionTable& t, std::size_t from,
                                                              std::size_t to) {
  if (from < 1) from = 1;
  t.at(to + 1);
  BigInt lhs, rhs;
  for (std::size_t n = from; n <= to; ++n) {
    lhs = t.at(n) * t.at(n);
    rhs = t.at(n - 1) * t.at(n + 1);
    if (!(lhs > rhs)) return n;
  }
  return std::nullopt;
}

inline CertInterval log_pbar(const OverpartitionTable& t, std::size_t n, Precision bits) {
  return log(CertInterval::exact(t.at(n), bits));
}

/// log r_alpha(n) = (log pbar(n) - alpha log n) / n.
inline CertInterval log_r_alpha(const OverpartitionTable& t, std::size_t n, const Rational& alpha,
                                Precision bits) {
  if (n == 0) throw DomainError("r_alpha is undefined at n = 0");
  if (alpha < 0) throw DomainError("alpha must be non-negative");
  CertInterval num = log_pbar(t, n, bits);
  if (alpha != 0 && n > 1) num = num - CertInterval::exact(alpha, bits) * log(CertInterval::exact(long(n), bits));
  return num / static_cast<long>(n);
}

struct ScaledRoot {
  std::size_t n = 0;
  Rational alpha;
  CertInterval value;
};

/// Encloses (pbar(n)/n^alpha)^{1/n}. Integer alpha goes through an exact
/// rational base and an n-th root, so perfect powers come out as points.
inline ScaledRoot r_alpha_value(const OverpartitionTable& t, std::size_t n, const Rational& alpha,
                                Precision bits) {
  if (n == 0) throw DomainError("r_alpha is undefined at n = 0");
  if (alpha < 0) throw DomainError("alpha must be non-negative");
  CertInterval v(bits);
  if (alpha.get_den() == 1 && alpha.get_num().fits_ulong_p()) {
    BigInt npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), n, alpha.get_num().get_ui());
    v = pow(CertInterval::exact(make_rational(t.at(n), npow), bits), make_rational(1, BigInt(static_cast<unsigned long>(n))));
  } else {
    v = exp(log_r_alpha(t, n, alpha, bits));
  }
  return {n, alpha, std::move(v)};
}

}  // namespace opart
