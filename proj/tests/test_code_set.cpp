#include "zccs/code_set.hpp"

#include <random>
#include <sstream>

#include "doctest.h"

using zccs::CodeSet;
using zccs::PhaseMatrix;

namespace {

CodeSet random_set(std::mt19937& rng, int q, std::size_t K, int M, int L,
                   bool grouped = false) {
  CodeSet set;
  set.meta = {q, K, M, L, L, "zccs"};
  std::uniform_int_distribution<int> dist(0, q - 1);
  for (std::size_t i = 0; i < K; ++i) {
    PhaseMatrix c(q, M, L);
    for (int& e : c.data) e = dist(rng);
    set.codes.push_back(std::move(c));
  }
  if (grouped) {
    set.meta.kind = "igc";
    for (std::size_t g = 0; g < 2; ++g) {
      zccs::CodeGroup grp;
      grp.label = "I_" + std::to_string(g);
      for (std::size_t i = g; i < K; i += 2) grp.members.push_back(i);
      set.groups.push_back(grp);
    }
  }
  return set;
}

}  // namespace

TEST_CASE("file format round trip") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    CodeSet set = random_set(rng, trial % 2 ? 4 : 8, 3, 2, 8, trial % 3 == 0);
    set.meta.Z = 4;
    std::ostringstream out;
    zccs::RunManifest manifest;
    manifest.command = "construct";
    write_code_set(out, set, &manifest);
    std::istringstream in(out.str());
    CodeSet back = zccs::read_code_set(in);
    CHECK(back.meta.q == set.meta.q);
    CHECK(back.meta.K == set.meta.K);
    CHECK(back.meta.M == set.meta.M);
    CHECK(back.meta.L == set.meta.L);
    CHECK(back.meta.Z == set.meta.Z);
    CHECK(back.meta.kind == set.meta.kind);
    CHECK(back.codes == set.codes);
    CHECK(back.groups.size() == set.groups.size());
    for (std::size_t g = 0; g < back.groups.size(); ++g) {
      CHECK(back.groups[g].label == set.groups[g].label);
      CHECK(back.groups[g].members == set.groups[g].members);
    }
  }
}

TEST_CASE("writer output is deterministic") {
  std::mt19937 rng(5);
  CodeSet set = random_set(rng, 4, 2, 2, 4);
  std::ostringstream a, b;
  write_code_set(a, set);
  write_code_set(b, set);
  CHECK(a.str() == b.str());
}

TEST_CASE("parse failures") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return zccs::read_code_set(in);
  };
  CHECK_THROWS(parse(""));
  CHECK_THROWS(parse("q 4\nbogus 1\n"));
  CHECK_THROWS(parse("q 4\nK 1\nM 2\nL 2\ncode 0\n0 1\n"));      // truncated
  CHECK_THROWS(parse("q 4\nK 1\nM 1\nL 2\ncode 0\n0 1 2\n"));    // long row
  CHECK_THROWS(parse("q 4\nK 1\nM 1\nL 2\ncode 0\n0 9\n"));      // bad phase
  CHECK_THROWS(parse("q 4\nK 2\nM 1\nL 2\ncode 0\n0 1\n"));      // K mismatch
}

TEST_CASE("zcz width of identical codes is zero") {
  std::mt19937 rng(9);
  CodeSet set = random_set(rng, 4, 1, 2, 8);
  set.codes.push_back(set.codes[0]);
  set.meta.K = 2;
  CHECK(zcz_width(set) == 0);
}

TEST_CASE("zcz width rejects empty sets") {
  CodeSet set;
  CHECK_THROWS_AS(zcz_width(set), std::invalid_argument);
}

TEST_CASE("manifest header lines carry version and command") {
  zccs::RunManifest manifest;
  manifest.command = "verify --claim zccs:16";
  manifest.config = "cfg.json";
  manifest.seed = 42;
  auto lines = manifest.header_lines();
  REQUIRE(lines.size() == 4);
  CHECK(lines[0].find(zccs::kToolVersion) != std::string::npos);
  CHECK(lines[1] == "command: verify --claim zccs:16");
  CHECK(lines[3] == "seed: 42");
}
