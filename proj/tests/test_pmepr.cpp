#include "zccs/pmepr.hpp"

#include <numeric>
#include <random>

#include "doctest.h"
#include "support/sweep.hpp"
#include "zccs/construction.hpp"

using zccs::Gbf;
using zccs::PhaseMatrix;
using zccs::PhaseSequence;

TEST_CASE("constant phases peak coherently") {
  for (int len : {2, 4, 8}) {
    PhaseSequence a{4, std::vector<int>(static_cast<std::size_t>(len), 0)};
    auto report = zccs::pmepr_sequence(a, 16);
    CHECK(report.value == doctest::Approx(len).epsilon(1e-9));
  }
}

TEST_CASE("length-1 sequence has unit ratio") {
  PhaseSequence a{4, {3}};
  CHECK(zccs::pmepr_sequence(a, 64).value == doctest::Approx(1.0));
}

TEST_CASE("a Golay sequence stays below two") {
  Gbf f(2, 2);
  f.add_term(0b11, 1);
  auto report = zccs::pmepr_sequence(psi(f), 64);
  CHECK(report.value <= 2.0 + 1e-6);
  CHECK(report.value >= 1.0);
}

TEST_CASE("masked entries are a domain error") {
  PhaseSequence a{4, {0, PhaseSequence::kZero}};
  CHECK_THROWS_AS(zccs::pmepr_sequence(a, 4), std::domain_error);
}

TEST_CASE("sampled peak is nondecreasing under grid refinement") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(0, 7);
  for (int trial = 0; trial < 10; ++trial) {
    PhaseSequence a{8, {}};
    for (int i = 0; i < 16; ++i) a.entries.push_back(dist(rng));
    double prev = 0;
    for (int oversample : {1, 2, 4, 8, 16, 32, 64}) {
      double v = zccs::pmepr_sequence(a, oversample).value;
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("mean sampled power equals the sequence length") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(0, 3);
  for (int trial = 0; trial < 5; ++trial) {
    PhaseSequence a{4, {}};
    for (int i = 0; i < 8; ++i) a.entries.push_back(dist(rng));
    auto power = zccs::envelope_power(a, 256);
    double mean = std::accumulate(power.begin(), power.end(), 0.0) /
                  static_cast<double>(power.size());
    CHECK(mean == doctest::Approx(8.0).epsilon(1e-6));
  }
}

TEST_CASE("single-row codes have unit column ratios") {
  PhaseMatrix code(4, 1, 6);
  for (int c = 0; c < 6; ++c) code.at(0, c) = c % 4;
  auto report = zccs::pmepr_code_columns(code, 16);
  CHECK(report.per_column.size() == 6);
  for (double v : report.per_column) CHECK(v == doctest::Approx(1.0));
  CHECK(report.value == doctest::Approx(1.0));
}

TEST_CASE("reference code columns meet the bound with passing certificates") {
  auto set = construct_zccs(zccs_test::example1_params());
  for (const PhaseMatrix& code : set.codes) {
    auto report = zccs::pmepr_code_columns(code, 64);
    CHECK(report.value <= 2.0 + 1e-6);
    auto certs = zccs::golay_mate_certificates(code);
    CHECK(certs.all_pass);
    CHECK(certs.columns.size() == 32);
  }
}

TEST_CASE("certificates fail on a non-path column profile") {
  // code whose columns are constant in the row index: the interpolated
  // function has an empty quadratic graph, which is not a Hamiltonian path
  PhaseMatrix code(4, 4, 2);
  for (int r = 0; r < 4; ++r) {
    code.at(r, 0) = 0;
    code.at(r, 1) = 1;
  }
  auto certs = zccs::golay_mate_certificates(code);
  CHECK(!certs.all_pass);
  CHECK(!certs.columns[0].pass);
  CHECK(certs.columns[0].mate_end_vertex == -1);
}

TEST_CASE("two-row columns always certify") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dist(0, 3);
  for (int trial = 0; trial < 10; ++trial) {
    PhaseMatrix code(4, 2, 4);
    for (int& e : code.data) e = dist(rng);
    auto certs = zccs::golay_mate_certificates(code);
    CHECK(certs.all_pass);
    for (const auto& cert : certs.columns) {
      CHECK(cert.mate_end_vertex == 0);
    }
  }
}

TEST_CASE("certified columns stay below the sampled bound") {
  std::mt19937 rng(23);
  zccs_test::SweepOptions opts;
  opts.max_m = 4;
  opts.max_n = 3;
  for (int trial = 0; trial < 6; ++trial) {
    auto params = zccs_test::random_construction_params(rng, opts);
    auto set = construct_zccs(params);
    const PhaseMatrix& code = set.codes[rng() % set.codes.size()];
    auto certs = zccs::golay_mate_certificates(code);
    REQUIRE(certs.all_pass);
    auto report = zccs::pmepr_code_columns(code, 16);
    CHECK(report.value <= 2.0 + 1e-6);
  }
}
