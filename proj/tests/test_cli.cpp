#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + OPART_CLI_PATH + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  static fs::path dir() {
    static fs::path d = [] {
      // one directory per process so parallel ctest runs do not collide
      fs::path x = fs::temp_directory_path() / ("opart_cli_test_" + std::to_string(getpid()));
      fs::remove_all(x);
      fs::create_directories(x);
      return x;
    }();
    return d;
  }
  static std::string cache() { return "--cache " + (dir() / "pbar.tsv").string(); }
};

}  // namespace

TEST_F(Cli, TableWritesCache) {
  CliResult r = run("table --max 6003 " + cache());
  ASSERT_EQ(r.code, 0);
  std::ifstream in(dir() / "pbar.tsv");
  std::string line;
  for (int i = 0; i < 4; ++i) std::getline(in, line);
  EXPECT_EQ(line, "3\t8");
}

TEST_F(Cli, SandwichScanFromCutoff) {
  run("table --max 6003 " + cache());
  fs::path out = dir() / "report.json";
  CliResult r = run("verify theorem14 --r 2 --alpha 0 --from 5505 --to 6000 --out " + out.string() + " " + cache());
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["summary"]["holds"], 496);
  EXPECT_EQ(j["summary"]["fails"], 0);
  EXPECT_EQ(j["rows"].size(), 496u);
}

TEST_F(Cli, TuranScanWithCsv) {
  fs::path csv = dir() / "turan.csv";
  CliResult r = run("scan turan --alpha 0 --from 2 --to 300 --csv " + csv.string() + " " + cache());
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["notes"]["first_holds"], 2);
  std::string text = slurp(csv);
  EXPECT_EQ(text.substr(0, text.find('\n')), "n,value_lo,value_hi,bound_lo,bound_hi");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 300);
}

TEST_F(Cli, DeterministicJson) {
  std::string args = "verify lemma32 --from 2 --to 150 " + cache();
  CliResult a = run(args + " --threads 1"), b = run(args + " --threads 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("runtime"), std::string::npos);
  EXPECT_NE(run(args + " --timing").out.find("runtime_seconds"), std::string::npos);
}

TEST_F(Cli, EnvironmentCacheAndFlagPrecedence) {
  fs::path envdir = dir() / "env";
  fs::create_directories(envdir);
  CliResult r = run("table --max 40", "OPART_CACHE_DIR=" + envdir.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(envdir / "pbar.tsv"));
  fs::path flag = dir() / "flag.tsv";
  run("table --max 30 --cache " + flag.string(), "OPART_CACHE_DIR=" + envdir.string());
  EXPECT_TRUE(fs::exists(flag));
  EXPECT_EQ(nlohmann::json::parse(run("table --max 30 --cache " + flag.string()).out)["cache"], flag.string());
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify lemma99 --from 1 --to 2").code, 2);
  EXPECT_EQ(run("verify theorem14 --from 10 --to 5").code, 2);
  EXPECT_EQ(run("diff --n 5 --alpha banana").code, 2);
  EXPECT_EQ(run("diff --n 5 --alpha -1").code, 2);
  EXPECT_EQ(run("table --max 500 --table-cap 100").code, 2);
  // printed b6 fails at asserted rows
  EXPECT_EQ(run("verify lemma32 --from 2 --to 20 --b6 printed " + cache()).code, 1);
  // below the cutoff: recorded, not asserted
  EXPECT_EQ(run("verify theorem14 --from 10 --to 20 " + cache()).code, 0);
}

TEST_F(Cli, OtherSubcommands) {
  CliResult e = run("enclose --n 100 --N 9 " + cache());
  ASSERT_EQ(e.code, 0);
  auto je = nlohmann::json::parse(e.out);
  EXPECT_EQ(je["exact"], "53287424374");
  EXPECT_EQ(je["contains_exact"], true);

  CliResult d = run("diff --n 100 --r 2 --alpha 0 " + cache());
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(nlohmann::json::parse(d.out)["H_plus_G_overlaps_value"], true);

  CliResult a = run("asymptote --r 2 --alpha 0 --points 1000,4000,5505 " + cache());
  ASSERT_EQ(a.code, 0);
  auto ja = nlohmann::json::parse(a.out);
  EXPECT_EQ(ja["rows"].size(), 3u);
  EXPECT_EQ(ja["rows"][2]["verdict"], "Holds");

  CliResult c = run("constants --r 2 --alpha 0");
  ASSERT_EQ(c.code, 0);
  auto jc = nlohmann::json::parse(c.out);
  bool found = false;
  for (const auto& x : jc["cutoffs"])
    if (x["name"] == "N(r,alpha)") found = x["integer_or_ln"] == "5505" && x["form"] == "integer";
  EXPECT_TRUE(found);
  for (const auto& x : jc["turan_cutoffs"]) {
    if (x["name"] == "n_u(alpha)") {
      EXPECT_EQ(x["form"], "exp");
    }
  }
}
