#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "test_util.hpp"

using namespace opart;
using testutil::table6k;

TEST(Scan, ParallelMapPreservesOrder) {
  auto sq = [](std::size_t n) { return n * n; };
  auto one = parallel_map(3, 500, sq, 1);
  auto many = parallel_map(3, 500, sq, 7);
  ASSERT_EQ(one.size(), 498u);
  EXPECT_EQ(one, many);
  EXPECT_EQ(one.front(), 9u);
  EXPECT_TRUE(parallel_map(5, 4, sq, 4).empty());
}

TEST(Scan, FirstErrorByIndexIsRethrown) {
  auto fn = [](std::size_t n) -> int {
    if (n == 40) throw std::runtime_error("forty");
    if (n == 90) throw std::logic_error("ninety");
    return 0;
  };
  try {
    parallel_map(1, 100, fn, 4);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "forty");
  }
}

TEST(Report, TalliesAndExitCodes) {
  Report rep;
  rep.command = "x";
  Row a;
  a.verdict = Verdict::Holds;
  Row b;
  b.verdict = Verdict::Fails;
  b.asserted = false;
  rep.rows = {a, b};
  EXPECT_EQ(rep.summary().fails, 1u);
  EXPECT_EQ(rep.asserted_summary().fails, 0u);
  EXPECT_EQ(rep.exit_code(), 0);
  Row c;
  c.verdict = Verdict::Undetermined;
  rep.rows.push_back(c);
  EXPECT_EQ(rep.exit_code(), 3);
  rep.rows.push_back(b);
  rep.rows.back().asserted = true;
  EXPECT_EQ(rep.exit_code(), 1);
}

TEST(Report, JsonSchema) {
  Report rep;
  rep.command = "verify demo";
  Row r;
  r.n = 7;
  r.verdict = Verdict::Fails;
  r.bits = 256;
  r.value = CertInterval::exact(Rational(1, 3), 256);
  rep.rows.push_back(r);
  Json j = rep.to_json();
  EXPECT_EQ(j["summary"]["fails"], 1);
  EXPECT_FALSE(j.contains("runtime_seconds"));
  const Json& v = j["rows"][0]["value"];
  EXPECT_TRUE(v["lo"].is_string());
  EXPECT_EQ(v["bits"], 256);
  // failing rows carry full precision endpoints
  EXPECT_GT(v["lo"].get<std::string>().size(), 70u);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "parameters", "summary", "asserted", "precision_used", "rows"}));
  rep.runtime_seconds = 1.5;
  EXPECT_TRUE(rep.to_json().contains("runtime_seconds"));
}

TEST(Report, Csv) {
  Report rep;
  Row r;
  r.n = 3;
  r.value = CertInterval::exact(1L, 64);
  r.bound_hi = CertInterval::exact(2L, 64);
  rep.rows.push_back(r);
  std::ostringstream os;
  rep.write_csv(os);
  std::string s = os.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "n,value_lo,value_hi,bound_lo,bound_hi");
  EXPECT_NE(s.find("\n3,1"), std::string::npos);
}

TEST(Campaigns, SandwichRange) {
  CampaignParams p;
  p.from = 5505;
  p.to = 5600;
  Report rep = run_verify("theorem14", p, table6k());
  EXPECT_EQ(rep.summary().holds, 96u);
  EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Campaigns, BelowCutoffRowsAreNotAsserted) {
  CampaignParams p;
  p.from = 2;
  p.to = 30;
  Report rep = run_verify("theorem14", p, table6k());
  EXPECT_GT(rep.summary().fails, 0u);
  EXPECT_EQ(rep.asserted_summary().fails + rep.asserted_summary().holds, 0u);
  EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Campaigns, ThreadCountDoesNotChangeOutput) {
  CampaignParams p;
  p.from = 2;
  p.to = 200;
  p.threads = 1;
  std::string one = run_verify("turan", p, table6k()).to_json().dump();
  p.threads = 5;
  EXPECT_EQ(one, run_verify("turan", p, table6k()).to_json().dump());
}

TEST(Campaigns, TuranScanFirstHolds) {
  CampaignParams p;
  p.from = 2;
  p.to = 100;
  Report rep = run_scan("turan", p, table6k());
  EXPECT_EQ(rep.notes["first_holds"], 2);
  EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Campaigns, ConvexityScan) {
  CampaignParams p;
  p.from = 2;
  p.to = 40;
  Report rep = run_scan("convexity", p, table6k());
  EXPECT_EQ(rep.rows[0].verdict, Verdict::Fails);
  EXPECT_FALSE(rep.rows[0].asserted);
  EXPECT_EQ(rep.rows[1].verdict, Verdict::Fails);
  EXPECT_EQ(rep.exit_code(), 0);
  p.alpha = 1;
  EXPECT_EQ(run_scan("convexity", p, table6k()).exit_code(), 0);
}

TEST(Campaigns, IdentityAndBadInput) {
  CampaignParams p;
  p.from = 10;
  p.to = 12;
  EXPECT_EQ(run_verify("identity", p, OverpartitionTable()).exit_code(), 0);
  p.to = 9;
  EXPECT_THROW(run_verify("identity", p, OverpartitionTable()), DomainError);
  EXPECT_THROW(run_verify("nope", CampaignParams{}, table6k()), DomainError);
  EXPECT_THROW(run_scan("nope", CampaignParams{}, table6k()), DomainError);
}

TEST(Campaigns, TableExtent) {
  CampaignParams p;
  p.to = 100;
  p.r = 3;
  EXPECT_EQ(table_extent("theorem14", p), 103u);
  EXPECT_EQ(table_extent("turan", p), 102u);
  EXPECT_EQ(table_extent("lemma33", p), 0u);
}
