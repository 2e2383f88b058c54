#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "zccs/code_set.hpp"

#include "json.hpp"

namespace zccs {

enum class SetKind { Ccc, Zccs, Igc, None };

struct Violation {
  std::size_t mu = 0;
  std::size_t nu = 0;
  int tau = 0;
  std::complex<double> value;
};

// Structured verification result: property failures come back as
// counterexamples, never exceptions, so callers can print the offending
// (mu, nu, tau, value).
struct Verdict {
  SetKind kind = SetKind::None;
  bool pass = false;
  int measured_z = 0;
  bool optimal = false;
  std::vector<Violation> violations;  // capped at kMaxViolations
  std::size_t violation_count = 0;    // total found

  static constexpr std::size_t kMaxViolations = 16;
};

// Definition of a complete complementary code: K == M, diagonal LM at
// tau = 0, and exact zeros elsewhere inside (-L, L).
Verdict verify_ccc(const CodeSet& set);

// ZCZ check: measures the actual width, passes when it reaches z_claimed,
// and reports whether K meets the set-size bound K = M * floor(L / Z).
Verdict verify_zccs(const CodeSet& set, int z_claimed);

// Grouped check: in-code and intra-group correlations vanish inside the
// zone, inter-group correlations vanish for every |tau| < L, diagonal is
// ML.  Throws std::invalid_argument when the grouping itself is malformed.
Verdict verify_igc(const CodeSet& set);

// Naive complex-arithmetic correlation tensor, value[mu][nu][tau + L - 1];
// the independent cross-check for the histogram engine.  Guarded to
// K * L * M <= 2^20.
using CorrelationTensor =
    std::vector<std::vector<std::vector<std::complex<double>>>>;
CorrelationTensor brute_force_correlations(const CodeSet& set);

nlohmann::json verdict_to_json(const Verdict& verdict);

}  // namespace zccs
