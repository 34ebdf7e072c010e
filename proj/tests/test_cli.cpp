#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "biased/cli.hpp"
#include "biased/instance.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = biased::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("biased-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& text = {}) const {
    const fs::path p = path / name;
    if (!text.empty()) std::ofstream(p) << text;
    return p.string();
  }
};

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("gen then validate") {
  TempDir dir;
  const std::string ka = dir.file("ka.txt");
  REQUIRE(run({"gen", "--family", "ka", "--a", "2", "--n", "6", "--out", ka}).code == 0);
  const auto v = run({"validate", ka});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("valid=true checked=", 0) == 0);

  const auto c = run({"classify", ka});
  CHECK(c.code == 0);
  CHECK(c.out == "delta-multiples=2\nlabellable=IsKa:2\nconstant=2 per-vertex=true\n");

  const auto s = run({"search", ka, "--r", "3", "--s", "3", "--t", "4"});
  CHECK(s.code == 0);
  CHECK(s.out.find("certificate: ") != std::string::npos);

  const std::string lab = dir.file("lab.txt");
  REQUIRE(run({"gen", "--family", "gamma-o", "--n", "5", "--out", lab}).code == 0);
  CHECK(run({"validate", lab}).code == 0);
  CHECK(run({"classify", lab}).out.rfind("delta-multiples=none\n", 0) == 0);
}

TEST_CASE("validate reports violations") {
  TempDir dir;
  const std::string bad =
      dir.file("bad.txt", "biased-clique v1\nn 4\nbalanced 2\n1 2 3\n1 2 4\nend\n");
  const auto v = run({"validate", bad});
  CHECK(v.code == 1);
  CHECK(v.out.rfind("valid=false", 0) == 0);
  CHECK(v.out.find("violation (1 3 2 4) (1 2 4) (1 2 3)") != std::string::npos);
}

TEST_CASE("generated output is stable across runs and job counts") {
  const auto a = run({"gen", "--family", "bq", "--n", "10", "--q-mask", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == run({"--jobs", "4", "gen", "--family", "bq", "--n", "10", "--q-mask", "5"}).out);
  const auto r1 = run({"--seed", "9", "gen", "--family", "bip-random", "--na", "4", "--nb", "4", "--modulus", "3"});
  const auto r2 = run({"--seed", "9", "gen", "--family", "bip-random", "--na", "4", "--nb", "4", "--modulus", "3"});
  const auto r3 = run({"--seed", "10", "gen", "--family", "bip-random", "--na", "4", "--nb", "4", "--modulus", "3"});
  CHECK(r1.out == r2.out);
  CHECK(r1.out != r3.out);

  TempDir dir;
  const std::string f = dir.file("k6.txt");
  REQUIRE(run({"gen", "--family", "ko", "--n", "6", "--out", f}).code == 0);
  CHECK(run({"validate", f}).out == run({"--jobs", "3", "validate", f}).out);
}

TEST_CASE("bicliques") {
  TempDir dir;
  const std::string f = dir.file("bip.txt");
  REQUIRE(run({"--seed", "3", "gen", "--family", "bip-random", "--na", "4", "--nb", "4", "--modulus", "2", "--out", f})
              .code == 0);
  const auto v = run({"validate", f});
  CHECK(v.code == 0);
  const auto s = run({"bipartite-search", f, "--t", "2"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("biclique a=", 0) == 0);

  const std::string all = dir.file("all.txt");
  REQUIRE(run({"gen", "--family", "bip-all", "--na", "3", "--nb", "3", "--out", all}).code == 0);
  CHECK(run({"bipartite-search", all, "--t", "3"}).out == "biclique a=1,2,3 b=1,2,3\n");
  CHECK(run({"bipartite-search", all, "--t", "4"}).out == "biclique=none\n");
}

TEST_CASE("omega and lemma checks") {
  const auto o = run({"omega", "--n", "6"});
  CHECK(o.code == 0);
  CHECK(o.out.find("components=4\n") != std::string::npos);
  CHECK(o.out.find("components-match-delta=true") != std::string::npos);
  CHECK(run({"omega", "--n", "9"}).code == 2);
  for (const char* which : {"basic", "paths", "omega", "constant", "theta-counts"}) {
    const auto r = run({"verify-lemma", which, "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAILED") == std::string::npos);
  }
  CHECK(run({"verify-lemma", "theta-counts", "--n", "6"}).out == "thetas n=6 count=1230 ok\n");
}

TEST_CASE("counterexample verb") {
  const auto all = run({"counterexample", "--n", "10", "--all"});
  CHECK(count_lines(all.out) == 16);
  CHECK(all.out.rfind("0 valid=true labellable=IsKa:6\n1 valid=false labellable=No\n", 0) == 0);
  CHECK(all.code == 1);
  const auto one = run({"counterexample", "--n", "10", "--q-mask", "6"});
  CHECK(one.out == "6 valid=true labellable=No\n");
  CHECK(one.code == 0);
  CHECK(run({"counterexample", "--n", "10"}).code == 2);
  CHECK(run({"counterexample", "--n", "11", "--q-mask", "1"}).code == 2);
}

TEST_CASE("exit codes for bad input") {
  TempDir dir;
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"validate", dir.file("missing.txt")}).code == 2);
  CHECK(run({"--jobs", "0", "omega", "--n", "5"}).code == 2);
  CHECK(run({"gen", "--family", "zz", "--n", "5"}).code == 2);

  const std::string bad = dir.file("bad.txt", "biased-clique v1\nn 4\nbalanced 1\n1 3 2\nend\n");
  const auto r = run({"validate", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 4") != std::string::npos);
  const std::string junk = dir.file("junk.txt", "hello\n");
  CHECK(run({"classify", junk}).code == 2);
  const std::string big = dir.file("big.txt");
  REQUIRE(run({"gen", "--family", "ku", "--n", "9", "--out", big}).code == 0);
  CHECK(run({"validate", big}).code == 2);
}
