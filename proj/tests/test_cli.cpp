#include <doctest.h>

#include "sqk/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sqk");
  std::ostringstream out, err;
  const int code = sqk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("sqk_test_" + name)).string();
}

}  // namespace

TEST_CASE("slope commands") {
  auto r = run({"slope", "twist", "0/1", "--power", "3"});
  REQUIRE(r.code == 0);
  auto j = r.report();
  CHECK(j.at("result") == json({{"p", 3}, {"q", 7}}));
  CHECK(j.at("command") == "slope twist");
  CHECK(j.at("version") == sqk::cli::kVersion);
  CHECK(j.at("config").at("power") == 3);

  CHECK(run({"slope", "twist", "1/3", "--of-q", "--power", "2"}).report().at("result") == json({{"p", 7}, {"q", 3}}));
  CHECK(run({"slope", "lift-check", "4/9"}).report().at("liftable") == true);
  CHECK(run({"slope", "lift-check", "inf"}).report().at("liftable") == false);
  j = run({"slope", "normalize", "7/3"}).report();
  CHECK(j.at("normalized") == json({{"p", 1}, {"q", 3}}));
  CHECK(j.at("k") == -2);
}

TEST_CASE("exit codes") {
  auto bad = run({"slope", "twist", "1/x"});
  CHECK(bad.code == 1);
  CHECK(bad.report().at("error").at("kind") == "invalid_argument");
  CHECK(run({"slope", "twist"}).code == 2);
  CHECK(run({"slope", "twist", "1/2", "--bogus"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"slope", "normalize", "inf"}).code == 1);
  CHECK(run({"vn", "build", "-1"}).code != 0);
}

TEST_CASE("fiber and group commands") {
  auto j = run({"vn", "counts", "5"}).report();
  CHECK(j.at("sextant_crossings") == 10);
  CHECK(j.at("outer_crossings") == 22);
  CHECK(run({"vn", "slope", "4"}).report().at("slope") == json({{"p", 4}, {"q", 9}}));
  CHECK(run({"vn", "slope", "4", "--mirror"}).report().at("slope") == json({{"p", -4}, {"q", 9}}));
  CHECK(run({"vn", "build", "2"}).report().at("components") == 1);
  CHECK(run({"pants", "check", "3"}).code == 0);
  CHECK(run({"group", "snf", "--n", "7"}).report().at("invariant_factors") == json({1, 1}));
  j = run({"group", "coset-enum", "--n", "2"}).report();
  CHECK(j.at("complete") == true);
  CHECK(j.at("order") == 1);
  j = run({"group", "ac-search", "--n", "1", "--max-length", "16", "--max-states", "200000"}).report();
  CHECK(j.at("found") == true);
  CHECK(j.at("certified") == true);
  CHECK(run({"group", "ac-search", "--n", "1"}).code == 2);
  j = run({"word", "read", std::string(SQK_FIXTURE_DIR) + "/staircase_qrelator.json", "--twist", "2"}).report();
  CHECK(j.at("word") == "bbbAA");
  CHECK(run({"kirby", "blowdown", "--matrix", "[[-1,1],[1,0]]", "--k", "0"}).report().at("result").at("matrix") ==
        json::parse("[[1]]"));
  CHECK(run({"kirby", "h1", "--matrix", "[[0,0],[0,0]]"}).report().at("invariant_factors") == json({0, 0}));
}

TEST_CASE("output file and determinism") {
  const auto path = temp_path("out.json");
  REQUIRE(run({"vn", "build", "3", "--output", path}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(json::parse(buf.str()) == run({"vn", "build", "3"}).report());
  std::remove(path.c_str());

  const auto a = run({"verify-all", "--n", "8"});
  const auto b = run({"verify-all", "--n", "8"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.report().at("all_passed") == true);
  CHECK(a.report().at("n") == 8);
}

TEST_CASE("verify-all rejects a corrupted base curve") {
  std::ifstream in(std::string(SQK_FIXTURE_DIR) + "/v0.json");
  json fx = json::parse(in);
  fx["curve"]["sextants"][3]["OI"] = 0;  // outer edge 0 left unmatched
  const auto path = temp_path("bad_v0.json");
  std::ofstream(path) << fx.dump();
  const auto r = run({"verify-all", "--n", "4", "--v0", path});
  std::remove(path.c_str());
  CHECK(r.code == 1);
  const auto j = r.report();
  CHECK(j.at("all_passed") == false);
  bool named = false;
  for (const auto& c : j.at("checks"))
    if (!c.at("passed").get<bool>() && c.at("failure").get<std::string>().find("V_0 fixture rejected") != std::string::npos)
      named = true;
  CHECK(named);
  INFO(r.out);
}
