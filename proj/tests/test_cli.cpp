#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

#include "genlambda/json_io.hpp"

using namespace genlambda;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + GENLAMBDA_CLI_PATH + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("genlambda_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d / name;
}

}  // namespace

TEST(Json, CycNumRoundTrip) {
  const CycNum x = CycNum::from_coords(7, {mpq_class(3, 4), mpq_class(-5), mpq_class(0), mpq_class(1, 3), mpq_class("123456789012345678901234567890"), mpq_class(2, 9)});
  const json j = to_json(x);
  EXPECT_EQ(j["coords"][4][0], "123456789012345678901234567890");
  EXPECT_EQ(cyc_from_json(j), x);
}

TEST(Json, QSeriesRoundTrip) {
  const QSeries s = lambda_series(SL2Mat(0, -1, 1, 0), 5, 12);
  const QSeries back = qseries_from_json(to_json(s));
  EXPECT_EQ(back, s);
  EXPECT_EQ(back.ord(), s.ord());
  EXPECT_EQ(back.prec(), s.prec());
  const QSeries z = QSeries::zero(5, 7);
  EXPECT_EQ(qseries_from_json(to_json(z)).prec(), 7);
}

TEST(Json, BivarRoundTripGivesSameVerdict) {
  for (int n : {3, 4, 5}) {
    const BivarPoly f = build_F(n);
    const BivarPoly g = bivar_from_json(json::parse(to_json(f).dump()));
    EXPECT_EQ(g, f);
    EXPECT_TRUE(revalidate(g));
    const auto a = verify_theorem1(f), b = verify_theorem1(g);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].pass, b[i].pass) << a[i].name;
  }
}

TEST(Json, CuspSchema) {
  const json j = cusps_json(4);
  ASSERT_EQ(j.size(), 6u);
  for (const auto& c : j) {
    EXPECT_TRUE(c["class"] == "S1" || c["class"] == "S2");
    EXPECT_EQ(c["nu_orbit"].size(), 4u);
    EXPECT_EQ(c["matrix"].size(), 2u);
  }
}

TEST(Cache, CorruptedEntryIsRebuilt) {
  const fs::path dir = scratch("cache");
  ::setenv("GENLAMBDA_CACHE_DIR", dir.c_str(), 1);
  const BivarPoly f = cached_build_F(3);
  const fs::path p = cache_path(dir, 3, default_precision(3));
  ASSERT_TRUE(fs::exists(p));
  EXPECT_EQ(cached_build_F(3), f);
  // flip one coefficient; revalidation must reject it
  json j = load_json(p);
  j["P"][5]["poly"][0] = to_json(CycNum::from_int(3, 17));
  save_json(j, p);
  EXPECT_FALSE(revalidate(bivar_from_json(j)));
  EXPECT_EQ(cached_build_F(3), f);
  EXPECT_EQ(bivar_from_json(load_json(p)), f);
  ::unsetenv("GENLAMBDA_CACHE_DIR");
  fs::remove_all(dir);
}

TEST(Cli, CountsLevelFive) {
  const CliRun r = run_cli("counts --level 5");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["ell"], 4);
  EXPECT_EQ(j["t"], 3);
  EXPECT_EQ(j["dN"], 60);
}

TEST(Cli, BuildThenVerify) {
  const fs::path out = scratch("F3.json");
  ASSERT_EQ(run_cli("minpoly build --level 3 --out " + out.string()).code, 0);
  const json j = load_json(out);
  EXPECT_EQ(j["dN"], 12);
  EXPECT_FALSE(j.contains("prec"));
  const CliRun fresh = run_cli("minpoly verify --level 3");
  const CliRun loaded = run_cli("minpoly verify --level 3 --in " + out.string());
  EXPECT_EQ(fresh.code, 0);
  EXPECT_EQ(loaded.code, 0);
  EXPECT_EQ(fresh.out, loaded.out);
  EXPECT_TRUE(json::parse(fresh.out)["pass"].get<bool>());
  fs::remove(out);
}

TEST(Cli, SumsSweep) {
  const CliRun r = run_cli("sums --max-M 50 --verify");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["mismatches"].empty());
}

TEST(Cli, OutputIndependentOfThreadCount) {
  const CliRun a = run_cli("minpoly build --level 4 --threads 1"), b = run_cli("minpoly build --level 4 --threads 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli("").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  EXPECT_EQ(run_cli("counts --level 2").code, 2);
  EXPECT_EQ(run_cli("counts --bogus").code, 2);
  EXPECT_EQ(run_cli("counts --format xml").code, 2);
  EXPECT_EQ(run_cli("qexp --level 3 nonsense").code, 2);
  EXPECT_EQ(run_cli("minpoly build --level 5 --prec 10").code, 2);
}

TEST(Cli, QexpAndCmEval) {
  const CliRun q = run_cli("qexp --level 3 --prec 10 j");
  ASSERT_EQ(q.code, 0);
  EXPECT_EQ(qseries_from_json(json::parse(q.out)), j_series(3, 10));
  const CliRun e = run_cli("cm eval --level 3 --tau 0 1");
  ASSERT_EQ(e.code, 0);
  const json v = json::parse(e.out);
  EXPECT_NEAR(v["j"][0].get<double>(), 1728.0, 1e-8);
}

TEST(Cli, LevelSixWarnsButRuns) {
  const std::string cmd = std::string(GENLAMBDA_CLI_PATH) + " counts --level 6 2>&1 >/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string err;
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), p)) err += buf.data();
  EXPECT_EQ(pclose(p), 0);
  EXPECT_NE(err.find("WARNING"), std::string::npos);
}
