// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace pbfock;
using namespace pbfock::cli;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pbfock");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
  const Run r = run(std::move(args));
  INFO(r.err);
  REQUIRE(r.code == expected_code);
  return json::parse(r.out);
}

const json& find_check(const json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return c;
  FAIL("missing check " << name);
  return report;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string l; std::getline(ss, l);) out.push_back(l);
  return out;
}

} // namespace

TEST_CASE("parameter and grid parsing") {
  CHECK(parse_complex("0.3") == Complex(0.3, 0.0));
  CHECK(parse_complex("0.1, -0.2") == Complex(0.1, -0.2));
  CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("0.1,"), std::invalid_argument);
  CHECK(parse_grid("0.1,0.2").size() == 2);
  const auto g = parse_grid("0.1:0.45:0.05");
  REQUIRE(g.size() == 8);
  CHECK_THAT(g.back(), WithinAbs(0.45, 1e-12));
  CHECK_THROWS_AS(parse_grid("0.1:0.2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("0.3:0.1:0.1"), std::invalid_argument);
}

TEST_CASE("verify passes inside the disk and reports every check") {
  const json r = run_json({"verify", "--family", "gauss-lowering", "--alpha", "0.3", "--dim", "96", "--nmax", "16"});
  CHECK(r["meta"]["dim"] == 96);
  CHECK(r["meta"]["nmax"] == 16);
  CHECK(r["meta"]["margin"] == 2);
  CHECK(r["meta"]["tol.commutator"] == 1e-12);
  for (const auto& c : r["checks"]) {
    INFO(c.dump());
    CHECK((c["status"] == "pass" || c["status"] == "not-applicable"));
    CHECK(c["provenance"].get<std::string>().size() > 0);
  }
  CHECK(find_check(r, "coordinate_form")["status"] == "not-applicable");
  CHECK(r["tables"]["family"]["rows"].size() == 17);
}

TEST_CASE("verify in the orthonormal limit") {
  for (const char* fam : {"gauss-lowering", "gauss-raising"}) {
    const json r = run_json({"verify", "--family", fam, "--alpha", "0", "--beta", "0"});
    for (const auto& c : r["checks"])
      if (c["status"] == "pass") CHECK(c["observed"].get<double>() <= 1e-12);
  }
}

TEST_CASE("verify refuses parameters outside the disk") {
  const Run r = run({"verify", "--family", "gauss-lowering", "--alpha", "0.6", "--dim", "96", "--nmax", "16"});
  CHECK(r.code == 2);
  CHECK(r.err.find("|parameter| < 1/2") != std::string::npos);
  CHECK(run({"verify", "--family", "gauss-raising", "--beta", "0.5"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--dim", "10"}).code == 2);
  CHECK(run({"verify", "--family", "gauss-sideways"}).code == 2);
  CHECK(run({"verify", "--tol", "nonsense=1"}).code == 2);
  CHECK(run({"verify", "--tol", "commutator=0"}).code == 2);
  CHECK(run({"verify", "--format", "xml"}).code == 2);
  CHECK(run({"sweep", "--grid", "0.1:x:0.1"}).code == 2);
  CHECK(run({"nogo", "--power", "1"}).code == 2);
  CHECK(run({"nogo", "--kmax", "5"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("a failed check exits with 1") {
  const Run r = run({"verify", "--alpha", "0.3", "--tol", "biorthonormality=1e-30"});
  CHECK(r.code == 1);
  CHECK(r.err.find("biorthonormality") != std::string::npos);
  // margin 0 includes the truncation boundary, where [A, B] = 1 fails
  CHECK(run({"verify", "--alpha", "0.3", "--margin", "0"}).code == 1);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"verify", "--alpha", "0.25,0.1", "--nmax", "12"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> sweep{"sweep", "--grid", "0:0.6:0.05"};
  CHECK(run(sweep).out == run(sweep).out);
}

TEST_CASE("sweep tabulates the convergence disk") {
  const json r = run_json({"sweep", "--grid", "0.1,0.2,0.3,0.4,0.45"});
  const auto& t = r["tables"]["sweep"];
  const auto& cols = t["columns"];
  auto col = [&](const std::string& name) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (cols[i] == name) return i;
    FAIL("missing column " << name);
    return std::size_t{0};
  };
  REQUIRE(t["rows"].size() == 5);
  const double expected[] = {0.1, 0.2, 0.3, 0.4, 0.45};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& row = t["rows"][i];
    CHECK(row[col("parameter")].get<double>() == expected[i]);
    CHECK(row[col("classification")] == "convergent");
  }
  CHECK_THAT(t["rows"][2][col("series_vacuum_norm_sq")].get<double>(), WithinAbs(1.25, 1e-10));

  const json d = run_json({"sweep", "--grid", "0.5,0.55"});
  for (const auto& row : d["tables"]["sweep"]["rows"]) {
    CHECK(row[col("classification")] == "divergent");
    CHECK(row[col("series_vacuum_norm_sq")].is_null());
  }
}

TEST_CASE("sweep csv has a header and one row per parameter") {
  const Run r = run({"sweep", "--grid", "0:0.3:0.1", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0].rfind("parameter,limit_ratio,classification", 0) == 0);
  CHECK(ls[1].rfind("0,0,convergent", 0) == 0);
}

TEST_CASE("nogo coefficient table") {
  const json r = run_json({"nogo", "--power", "2", "--alpha", "1", "--kmax", "20"});
  const auto& rows = r["tables"]["coefficients"]["rows"];
  REQUIRE(rows.size() == 21);
  CHECK(rows[1][1] == 3);
  CHECK_THAT(std::pow(10.0, 0.5 * rows[1][2].get<double>()), WithinRel(0.8165, 1e-4));
  CHECK(r["tables"]["classification"]["rows"][0][1] == "divergent");

  const json z = run_json({"nogo", "--power", "2", "--alpha", "0"});
  CHECK(z["tables"]["classification"]["rows"][0][1] == "convergent");
  CHECK(z["tables"]["coefficients"]["rows"].size() == 1);

  const json p3 = run_json({"nogo", "--power", "3", "--alpha", "0.2", "--kmax", "100"});
  CHECK(p3["tables"]["classification"]["rows"][0][1] == "divergent");
  std::int64_t expect = 0;
  for (const auto& row : p3["tables"]["coefficients"]["rows"]) {
    CHECK(row[1] == expect);
    expect += 4;
  }
}

TEST_CASE("nogo reports an inconclusive window as a failed check") {
  const Run r = run({"nogo", "--power", "2", "--alpha", "0.01", "--kmax", "100"});
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  CHECK(j["tables"]["classification"]["rows"][0][1] == "inconclusive");
  CHECK(j["tables"]["classification"]["rows"][0][2] == 3334);
}

TEST_CASE("nogo dual family") {
  const json r = run_json({"nogo", "--dual", "--power", "2", "--beta", "0.3"});
  CHECK(r["meta"]["family"] == "dual-power-lowering");
  CHECK(r["tables"]["classification"]["rows"][0][1] == "divergent");
  CHECK(find_check(r, "commutator")["status"] == "pass");
}

TEST_CASE("landau suite") {
  const json r = run_json({"landau", "--alpha", "0.3", "--beta", "0.2", "--dim", "32", "--nmax", "4"});
  for (const auto& c : r["checks"]) {
    INFO(c.dump());
    CHECK(c["status"] == "pass");
  }
  CHECK(r["meta"]["algebra_dim"] == 24);
  CHECK(r["tables"]["single_index_overlaps"]["rows"].size() == 9);
  CHECK(run({"landau", "--alpha", "0.3", "--beta", "0.6", "--dim", "32", "--nmax", "4"}).code == 2);
}

TEST_CASE("config file merges under flags") {
  const std::string path = "pbfock_test_config.ini";
  {
    std::ofstream f(path);
    f << "# sweep defaults\nalpha=0.2\ndim=64\nnmax=10\ntol=commutator=1e-11\n";
  }
  const json r = run_json({"verify", "--config", path, "--nmax", "8"});
  CHECK(r["meta"]["alpha"] == "0.20000000000000001");
  CHECK(r["meta"]["dim"] == 64);
  CHECK(r["meta"]["nmax"] == 8);
  CHECK(r["meta"]["tol.commutator"] == 1e-11);
  {
    std::ofstream f(path);
    f << "unknown_key=3\n";
  }
  CHECK(run({"verify", "--config", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("report goes to --out with a summary on stdout") {
  const std::string path = "pbfock_test_report.json";
  const Run r = run({"verify", "--alpha", "0.1", "--nmax", "6", "--dim", "40", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("report written to") != std::string::npos);
  std::ifstream f(path);
  const json j = json::parse(f);
  CHECK(j["meta"]["out"] == path);
  std::remove(path.c_str());
}
