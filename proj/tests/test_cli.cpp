#include <filesystem>
#include <sstream>

#include "bayesext/cli.hpp"
#include "bayesext/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bayesext;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("bayesext_cli_" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& text = "") const {
    const std::string p = (path / name).string();
    if (!text.empty()) write_file(p, text);
    return p;
  }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("build") {
    TempDir dir;
    const auto alg = dir.file("alg.json", R"({"atoms": ["a", "c", "d"]})");
    const auto tower = dir.file("tower.json");
    const Run r = run({"build", alg, "-o", tower});
    CHECK(r.code == 0);
    CHECK(r.out == "stage 0: 3 atoms {a,c,d}\n");
    const auto doc = nlohmann::json::parse(read_file(tower));
    CHECK(doc["base"].size() == 3);
    CHECK(doc["stages"][0]["atoms"][0] == nlohmann::json::array({"base", "a"}));

    CHECK(run({"build", dir.file("empty.json", R"({"atoms": []})")}).code == 2);
    CHECK(run({"build", dir.file("dup.json", R"({"atoms": ["a", "a"]})")}).code == 2);
    CHECK(run({"build", dir.file("missing.json")}).code == 2);
  }

  TEST_CASE("extend, cond and prob") {
    TempDir dir;
    const auto alg = dir.file("alg.json", R"({"atoms": ["a", "c", "d"]})");
    const auto dist = dir.file("dist.json", R"({"stage": 0, "masses": {"a": "1/4", "c": "1/4", "d": "1/2"}})");
    const auto tower = dir.file("tower.json");
    REQUIRE(run({"build", alg, "-o", tower}).code == 0);

    CHECK(run({"prob", tower, dist, "[{a,c}]{a}"}).out == "1/2\n");
    CHECK(tower_from_json(read_file(tower)).stage_count() == 1);

    const Run c = run({"cond", tower, "{a,c}", "{a}"});
    CHECK(c.code == 0);
    CHECK(c.out == "stage 1: {(a,d),(d,a)}\n");
    CHECK(tower_from_json(read_file(tower)).stage_count() == 2);

    const Run e = run({"extend", tower, "{(a,d),(c,d)}"});
    CHECK(e.code == 0);
    CHECK(e.out == "stage 2: 4 atoms, conditioned on @1{(a,d),(c,d)}\n");

    const Run j = run({"--format", "json", "prob", tower, dist, "{a} & [{a,c}]{a}"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["probability"] == "1/4");
    CHECK(run({"prob", tower, dist, "[{a,c}"}).code == 2);
    CHECK(run({"prob", tower, dist, "{b}"}).code == 2);
  }

  TEST_CASE("zero masses") {
    TempDir dir;
    const auto alg = dir.file("alg.json", R"({"atoms": ["a", "c", "d"]})");
    const auto dist = dir.file("dist.json", R"({"masses": {"a": "1/2", "c": "0", "d": "1/2"}})");
    const auto tower = dir.file("tower.json");
    REQUIRE(run({"build", alg, "-o", tower}).code == 0);
    CHECK(run({"prob", tower, dist, "{a,c}"}).out == "1/2\n");
    CHECK(run({"prob", tower, dist, "[{c}]{c}"}).out == "1\n");
    CHECK(run({"prob", "--strict", tower, dist, "[{c}]{c}"}).code == 2);
    const Run v = run({"verify", tower, dist});
    CHECK(v.code == 0);
    CHECK(v.out.find("standard part of the tangible distribution: matches") != std::string::npos);
  }

  TEST_CASE("verify and lewis") {
    TempDir dir;
    const auto alg = dir.file("alg.json", R"({"atoms": ["a", "c", "d"]})");
    const auto d1 = dir.file("d1.json", R"({"masses": {"a": "1/4", "c": "1/4", "d": "1/2"}})");
    const auto d2 = dir.file("d2.json", R"({"masses": {"a": "1/6", "c": "1/3", "d": "1/2"}})");
    const auto tower = dir.file("tower.json");
    REQUIRE(run({"build", alg, "-o", tower}).code == 0);
    REQUIRE(run({"extend", tower, "{a,c}"}).code == 0);
    const Run v = run({"verify", tower, d1});
    CHECK(v.code == 0);
    CHECK(v.out.find("verify: pass") != std::string::npos);
    const Run l = run({"lewis", alg, "{a,c}", "{a,d}", d1, d2});
    CHECK(l.code == 0);
    CHECK(l.out.rfind("internal witnesses: none\n", 0) == 0);
    const Run l1 = run({"--format", "json", "lewis", alg, "{a,c}", "{a,d}", d1});
    // One distribution alone admits internal witnesses: every z with P(z) = 1/2.
    CHECK(nlohmann::json::parse(l1.out)["internal_witnesses"] == nlohmann::json::array({"{a,c}", "{d}"}));
  }

  TEST_CASE("dbl subcommands") {
    TempDir dir;
    const auto alg = dir.file("alg.json", R"({"atoms": ["a", "c", "d"]})");
    const auto tower = dir.file("tower.json");
    REQUIRE(run({"build", alg, "-o", tower}).code == 0);
    const Run e = run({"dbl", "eval", tower, "~X || [X]X", "-b", "X={a}"});
    CHECK(e.code == 0);
    CHECK(e.out.find("holds") != std::string::npos);
    CHECK(run({"dbl", "eval", tower, "X"}).code == 2);
    CHECK(run({"dbl", "search", "[X]Y -> X -> Y"}).code == 0);
    CHECK(run({"dbl", "search", "[X]Y <-> Y"}).code == 1);
    const auto good = dir.file("good.json", R"([{"rule":"TAUT","conclusion":"x | ~x"}])");
    const auto bad = dir.file("bad.json", R"([{"rule":"TAUT","conclusion":"x | y"}])");
    CHECK(run({"dbl", "check", good}).code == 0);
    const Run b = run({"dbl", "check", good, bad});
    CHECK(b.code == 1);
    CHECK(b.out.find("bad: INVALID") != std::string::npos);
    CHECK(run({"dbl", "check", dir.file("junk.json", "{")}).code == 2);
  }

  TEST_CASE("pairing and usage errors") {
    CHECK(run({"pairing", "4"}).out == "1 1\n");
    CHECK(run({"pairing", "1", "1"}).out == "4\n");
    CHECK(run({"--format", "json", "pairing", "4"}).out == "{\"i\":1,\"j\":1,\"n\":4}\n");
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"pairing"}).code == 2);
    CHECK(run({"pairing", "x"}).code == 2);
    CHECK(run({"--field", "real", "pairing", "4"}).code == 2);
    const Run h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("pairing") != std::string::npos);
  }
}
