#include <doctest.h>

#include "gammab/cli.hpp"
#include "gammab/report_json.hpp"

using gammab::Json;
using gammab::cli::run;

namespace {

Json json_of(const gammab::cli::Outcome &o) {
  REQUIRE_MESSAGE(o.exit_code == 0, o.err);
  return Json::parse(o.out);
}

} // namespace

TEST_CASE("gamma on K_4") {
  Json j = json_of(run({"gamma", "--g6", "C~"}));
  CHECK(j["gamma"] == 4);
  CHECK(j["witness"].size() == 4);
  Json oracle = json_of(run({"gamma", "--g6", "C~", "--oracle"}));
  CHECK(oracle["gamma"] == 4);
}

TEST_CASE("value subcommands") {
  CHECK(json_of(run({"bnum", "--family", "B:4"}))["value"] == 2);
  CHECK(json_of(run({"m", "--family", "B:4"}))["value"] == 4);
  CHECK(json_of(run({"chi", "--family", "K:5"}))["value"] == 5);
  CHECK(json_of(run({"omega", "--family", "B:3"}))["value"] == 2);
  Json e = json_of(run({"eliminate", "--family", "path:4", "--coloring", "1,2,3,1"}));
  CHECK(e["value"] == 2);
  CHECK(e["witness"] == Json::array({2, 1, 2, 1}));
}

TEST_CASE("validation subcommands") {
  CHECK(json_of(run({"check-grundy", "--family", "path:4", "--coloring", "1,1,2,3"}))["value"] ==
        false);
  CHECK(json_of(run({"check-grundy", "--family", "path:4", "--coloring", "1,2,3,1"}))["value"] ==
        true);
  CHECK(json_of(run({"check-bcoloring", "--family", "R:4", "--coloring",
                     "4,1,2,3,2,3,1,3,1,2"}))["value"] == true);
}

TEST_CASE("forb") {
  Json j = json_of(run({"forb", "--family", "B:3", "--pattern-family", "path:5"}));
  CHECK(j["value"] == false);
  Json k = json_of(run({"forb", "--family", "B:5", "--pattern-family", "path:6"}));
  CHECK(k["value"] == true);
}

TEST_CASE("monotone") {
  Json j = json_of(run({"monotone", "--family", "B:4", "--exact"}));
  CHECK(j["monotone"] == false);
  CHECK(j["witness"]["b"] == 3);
  Json s = json_of(run({"monotone", "--family", "K:6", "--sample", "200", "3"}));
  CHECK(s["monotone"] == true);
}

TEST_CASE("profile and sweep") {
  Json p = json_of(run({"profile", "--family", "B:3"}));
  CHECK(p["gamma"] == 4);
  CHECK(p["b"] == 2);
  auto csv = run({"sweep", "--family", "B", "--range", "2..5", "--format", "csv"});
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("B,3,6,3,2,2,3,4,2,2") != std::string::npos);
  auto again = run({"sweep", "--family", "B", "--range", "2..5", "--format", "csv"});
  CHECK(again.out == csv.out);
}

TEST_CASE("gen") {
  CHECK(run({"gen", "--family", "K:4", "--format", "g6"}).out == "C~\n");
  Json j = json_of(run({"gen", "--family", "path:3"}));
  CHECK(j["n"] == 3);
}

TEST_CASE("seed determines randomized output") {
  auto a = run({"sweep", "--family", "tree", "--range", "3..6", "--seed", "4"});
  auto b = run({"sweep", "--family", "tree", "--range", "3..6", "--seed", "4"});
  auto c = run({"sweep", "--family", "tree", "--range", "3..6", "--seed", "5"});
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("exit codes") {
  using namespace gammab::cli;
  CHECK(run({}).exit_code == kUsageError);
  CHECK(run({"bogus"}).exit_code == kUsageError);
  CHECK(run({"gamma"}).exit_code == kUsageError);
  CHECK(run({"gamma", "--g6", "C~", "--family", "K:4"}).exit_code == kUsageError);
  CHECK(run({"sweep", "--family", "B", "--range", "x"}).exit_code == kUsageError);

  auto bad = run({"gamma", "--g6", "C"});
  CHECK(bad.exit_code == kDomainError);
  CHECK_FALSE(bad.err.empty());
  CHECK(bad.out.empty());
  CHECK(run({"gamma", "--family", "path:20"}).exit_code == kDomainError);
  CHECK(run({"gamma", "--family", "path:20", "--cap-n", "20"}).exit_code == kOk);
  CHECK(run({"gamma", "--family", "path:10", "--oracle"}).exit_code == kDomainError);
  CHECK(run({"eliminate", "--family", "K:2", "--coloring", "1,1"}).exit_code == kDomainError);
  CHECK(run({"gamma", "--file", "/nonexistent/graph.txt"}).exit_code == kDomainError);
  CHECK(run({"--help"}).exit_code == kOk);
}
