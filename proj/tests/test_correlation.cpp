#include "zccs/correlation.hpp"

#include <bit>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"

using zccs::accf;
using zccs::CorrelationValue;
using zccs::Gbf;
using zccs::PhaseMatrix;
using zccs::PhaseSequence;

namespace {

PhaseSequence seq(int q, std::vector<int> entries) {
  return PhaseSequence{q, std::move(entries)};
}

std::complex<double> direct_correlation(const PhaseSequence& a,
                                        const PhaseSequence& b, int tau) {
  auto unit = [&](int p) -> std::complex<double> {
    if (p == PhaseSequence::kZero) return 0;
    double angle = 2.0 * std::numbers::pi * p / a.q;
    return {std::cos(angle), std::sin(angle)};
  };
  std::complex<double> sum = 0;
  auto L = static_cast<int>(a.entries.size());
  for (int i = 0; i < L; ++i) {
    int ia = i + tau;
    if (ia < 0 || ia >= L) continue;
    sum += unit(a.entries[static_cast<std::size_t>(ia)]) *
           std::conj(unit(b.entries[static_cast<std::size_t>(i)]));
  }
  return sum;
}

PhaseSequence random_sequence(std::mt19937& rng, int q, std::size_t len,
                              bool with_zeros = false) {
  PhaseSequence s;
  s.q = q;
  std::uniform_int_distribution<int> dist(0, q - 1);
  std::uniform_int_distribution<int> zero(0, 4);
  for (std::size_t i = 0; i < len; ++i) {
    if (with_zeros && zero(rng) == 0) {
      s.entries.push_back(PhaseSequence::kZero);
    } else {
      s.entries.push_back(dist(rng));
    }
  }
  return s;
}

Gbf random_gbf(std::mt19937& rng, int q, int m) {
  Gbf f(q, m);
  std::uniform_int_distribution<int> coeff(0, q - 1);
  std::uniform_int_distribution<Gbf::Monomial> mono(0, (1u << m) - 1);
  int terms = std::uniform_int_distribution<int>(1, 2 * m + 2)(rng);
  for (int i = 0; i < terms; ++i) f.add_term(mono(rng), coeff(rng));
  return f;
}

}  // namespace

TEST_CASE("in-phase energy at zero shift") {
  PhaseSequence a = seq(2, {0, 0, 0, 1});
  CorrelationValue v = accf(a, a, 0);
  CHECK(v.counts[0] == 4);
  CHECK(v.realize() == std::complex<double>(4, 0));
}

TEST_CASE("shifted pairs cancel") {
  PhaseSequence a = seq(2, {0, 0, 0, 1});
  CorrelationValue v = accf(a, a, 2);
  CHECK(v.counts[0] == 1);
  CHECK(v.counts[1] == 1);
  CHECK(v.is_zero());
}

TEST_CASE("no overlap outside (-L, L)") {
  std::mt19937 rng(2);
  PhaseSequence a = random_sequence(rng, 4, 4);
  PhaseSequence b = random_sequence(rng, 4, 4);
  for (int tau : {4, -4, 7, -9}) {
    CHECK(accf(a, b, tau).total() == 0);
    CHECK(accf(a, b, tau).is_zero());
  }
}

TEST_CASE("length mismatch is an error") {
  PhaseSequence a = seq(2, {0, 1});
  PhaseSequence b = seq(2, {0, 1, 0});
  CHECK_THROWS_AS((void)accf(a, b, 0), std::invalid_argument);
}

TEST_CASE("conjugate symmetry") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int q = 2 << (trial % 3);
    PhaseSequence a = random_sequence(rng, q, 8, true);
    PhaseSequence b = random_sequence(rng, q, 8, true);
    for (int tau = -8; tau <= 8; ++tau) {
      auto lhs = accf(a, b, tau).realize();
      auto rhs = std::conj(accf(b, a, -tau).realize());
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("histogram matches direct complex summation") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    int q = 2 << (trial % 3);  // 2, 4, 8
    int m = 1 + trial % 6;
    PhaseSequence a = random_sequence(rng, q, std::size_t{1} << m, true);
    PhaseSequence b = random_sequence(rng, q, std::size_t{1} << m, true);
    for (int tau = -(1 << m); tau <= (1 << m); ++tau) {
      auto lhs = accf(a, b, tau).realize();
      auto rhs = direct_correlation(a, b, tau);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
  }
}

TEST_CASE("masked entries contribute nothing") {
  PhaseSequence a = seq(4, {0, PhaseSequence::kZero, 2, 1});
  PhaseSequence b = seq(4, {1, 1, PhaseSequence::kZero, 3});
  CorrelationValue v = accf(a, b, 0);
  // only indices 0 and 3 pair up
  CHECK(v.total() == 2);
  CHECK(std::abs(v.realize() - direct_correlation(a, b, 0)) < 1e-12);
}

TEST_CASE("exact zero test for q=4") {
  CorrelationValue v(4);
  v.counts = {1, 0, 1, 0};  // 1 + omega^2 = 0
  CHECK(v.is_zero());
  CorrelationValue w(4);
  w.counts = {2, 0, 0, 0};
  CHECK(!w.is_zero());
}

TEST_CASE("odd q is rejected upstream") {
  CHECK_THROWS_AS(Gbf(3, 2), std::invalid_argument);
}

TEST_CASE("code correlation diagonal is LM") {
  PhaseMatrix c(4, 2, 4);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(0, 3);
  for (int& e : c.data) e = dist(rng);
  CorrelationValue v = code_correlation(c, c, 0);
  CHECK(v.counts[0] == 8);
  CHECK(v.total() == 8);
}

TEST_CASE("code correlation of conjugated rows is real") {
  std::mt19937 rng(4);
  PhaseMatrix c(4, 2, 4);
  std::uniform_int_distribution<int> dist(0, 3);
  for (int& e : c.data) e = dist(rng);
  PhaseMatrix conj = c.conjugated();
  auto v = code_correlation(c, conj, 0).realize();
  std::complex<double> direct = 0;
  for (int r = 0; r < 2; ++r) {
    direct +=
        direct_correlation(c.row_sequence(r), conj.row_sequence(r), 0);
  }
  CHECK(std::abs(v - direct) < 1e-12);
  CHECK(std::abs(v.imag() - 0.0) < 1e-12);
}

TEST_CASE("correlation trace indexes every shift") {
  std::mt19937 rng(8);
  PhaseMatrix c(2, 1, 4);
  std::uniform_int_distribution<int> dist(0, 1);
  for (int& e : c.data) e = dist(rng);
  auto trace = code_correlation_trace(c, c);
  CHECK(trace.values.size() == 7);
  CHECK(trace.at(0).counts[0] == 4);
  for (int tau = -3; tau <= 3; ++tau) {
    auto direct = direct_correlation(c.row_sequence(0), c.row_sequence(0), tau);
    CHECK(std::abs(trace.at(tau).realize() - direct) < 1e-12);
  }
}

// Correlation of restricted sequences splits into the sum over refinements
// fixing additional variables, for any disjoint index sets.
TEST_CASE("restriction refinement splitting identity") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    int q = trial % 2 ? 4 : 2;
    int m = 3 + trial % 3;
    Gbf f = random_gbf(rng, q, m);
    Gbf g = random_gbf(rng, q, m);

    // J = {0}, y = {m-1} (disjoint by construction)
    for (int c = 0; c < 2; ++c) {
      for (int d = 0; d < 2; ++d) {
        auto lhs_f = psi(zccs::restrict_function(f, {{0, c}}));
        auto lhs_g = psi(zccs::restrict_function(g, {{0, d}}));
        for (int tau = -(1 << m) + 1; tau < (1 << m); ++tau) {
          auto lhs = accf(lhs_f, lhs_g, tau).realize();
          std::complex<double> rhs = 0;
          for (int c1 = 0; c1 < 2; ++c1) {
            for (int c2 = 0; c2 < 2; ++c2) {
              auto rf = psi(zccs::restrict_function(f, {{0, c}, {m - 1, c1}}));
              auto rg = psi(zccs::restrict_function(g, {{0, d}, {m - 1, c2}}));
              rhs += accf(rf, rg, tau).realize();
            }
          }
          CHECK(std::abs(lhs - rhs) < 1e-9);
        }
      }
    }
  }
}
