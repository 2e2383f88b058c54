#include "zccs/verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zccs {

namespace {

void record(Verdict& verdict, std::size_t mu, std::size_t nu, int tau,
            const CorrelationValue& v) {
  ++verdict.violation_count;
  if (verdict.violations.size() < Verdict::kMaxViolations) {
    verdict.violations.push_back(Violation{mu, nu, tau, v.realize()});
  }
}

// Checks C(mu, nu)(tau) == 0 over |tau| < limit (tau != 0 when mu == nu,
// where the diagonal is checked against LM instead).
void check_pair(Verdict& verdict, const CodeSet& set, std::size_t mu,
                std::size_t nu, int limit) {
  const PhaseMatrix& a = set.codes[mu];
  const PhaseMatrix& b = set.codes[nu];
  for (int tau = -(limit - 1); tau < limit; ++tau) {
    CorrelationValue v = code_correlation(a, b, tau);
    if (mu == nu && tau == 0) {
      std::int64_t want = static_cast<std::int64_t>(set.meta.M) * set.meta.L;
      bool diagonal_ok = v.counts[0] == want && v.total() == want;
      if (!diagonal_ok) record(verdict, mu, nu, tau, v);
      continue;
    }
    if (!v.is_zero()) record(verdict, mu, nu, tau, v);
  }
}

}  // namespace

Verdict verify_ccc(const CodeSet& set) {
  if (set.codes.empty()) throw std::invalid_argument("verify_ccc: empty set");
  Verdict verdict;
  verdict.kind = SetKind::Ccc;
  verdict.measured_z = zcz_width(set);
  if (set.codes.size() != static_cast<std::size_t>(set.meta.M)) {
    verdict.pass = false;
    return verdict;
  }
  for (std::size_t mu = 0; mu < set.codes.size(); ++mu) {
    for (std::size_t nu = 0; nu < set.codes.size(); ++nu) {
      check_pair(verdict, set, mu, nu, set.meta.L);
    }
  }
  verdict.pass = verdict.violation_count == 0;
  verdict.optimal = verdict.pass;  // a CCC meets K = M * floor(L/L)
  return verdict;
}

Verdict verify_zccs(const CodeSet& set, int z_claimed) {
  if (set.codes.empty()) throw std::invalid_argument("verify_zccs: empty set");
  Verdict verdict;
  verdict.kind = SetKind::Zccs;
  verdict.measured_z = zcz_width(set);
  verdict.pass = verdict.measured_z >= z_claimed;
  if (verdict.measured_z > 0) {
    std::size_t bound = static_cast<std::size_t>(set.meta.M) *
                        static_cast<std::size_t>(set.meta.L / verdict.measured_z);
    verdict.optimal = set.codes.size() == bound;
  }
  if (!verdict.pass) {
    // collect witnesses inside the claimed zone
    for (std::size_t mu = 0; mu < set.codes.size(); ++mu) {
      for (std::size_t nu = 0; nu < set.codes.size(); ++nu) {
        int start = (mu == nu) ? 1 : 0;
        for (int tau = start; tau < z_claimed && tau < set.meta.L; ++tau) {
          CorrelationValue v = code_correlation(set.codes[mu], set.codes[nu], tau);
          if (!v.is_zero()) {
            record(verdict, mu, nu, tau, v);
            break;
          }
        }
      }
    }
  }
  return verdict;
}

Verdict verify_igc(const CodeSet& set) {
  if (set.codes.empty()) throw std::invalid_argument("verify_igc: empty set");
  const std::size_t K = set.codes.size();
  const int M = set.meta.M;
  const int L = set.meta.L;
  const int Z = set.meta.Z;
  if (set.groups.empty()) {
    throw std::invalid_argument("verify_igc: set carries no grouping");
  }
  if (Z <= 0 || static_cast<std::size_t>(M) * L != K * static_cast<std::size_t>(Z)) {
    throw std::invalid_argument("verify_igc: need K = M*L/Z");
  }
  if (set.groups.size() != static_cast<std::size_t>(M)) {
    throw std::invalid_argument("verify_igc: need M code groups");
  }
  std::vector<int> group_of(K, -1);
  for (std::size_t g = 0; g < set.groups.size(); ++g) {
    if (set.groups[g].members.size() != K / static_cast<std::size_t>(M)) {
      throw std::invalid_argument("verify_igc: groups must have K/M codes");
    }
    for (std::size_t member : set.groups[g].members) {
      if (member >= K || group_of[member] != -1) {
        throw std::invalid_argument("verify_igc: grouping is not a partition");
      }
      group_of[member] = static_cast<int>(g);
    }
  }

  Verdict verdict;
  verdict.kind = SetKind::Igc;
  verdict.measured_z = zcz_width(set);
  for (std::size_t mu = 0; mu < K; ++mu) {
    for (std::size_t nu = 0; nu < K; ++nu) {
      int limit = (group_of[mu] == group_of[nu]) ? Z : L;
      check_pair(verdict, set, mu, nu, limit);
    }
  }
  verdict.pass = verdict.violation_count == 0;
  verdict.optimal = true;  // K = ML/Z holds by the shape check above
  return verdict;
}

CorrelationTensor brute_force_correlations(const CodeSet& set) {
  const std::size_t K = set.codes.size();
  if (K == 0) throw std::invalid_argument("brute_force_correlations: empty set");
  const int M = set.meta.M;
  const int L = set.meta.L;
  if (K * static_cast<std::size_t>(M) * static_cast<std::size_t>(L) >
      (std::size_t{1} << 20)) {
    throw std::invalid_argument("brute_force_correlations: set too large");
  }
  const int q = set.meta.q;
  std::vector<std::complex<double>> unit(static_cast<std::size_t>(q));
  for (int p = 0; p < q; ++p) {
    double angle = 2.0 * std::numbers::pi * p / q;
    unit[static_cast<std::size_t>(p)] = {std::cos(angle), std::sin(angle)};
  }

  CorrelationTensor tensor(K);
  for (std::size_t mu = 0; mu < K; ++mu) {
    tensor[mu].resize(K);
    for (std::size_t nu = 0; nu < K; ++nu) {
      auto& row = tensor[mu][nu];
      row.resize(2 * static_cast<std::size_t>(L) - 1);
      for (int tau = -(L - 1); tau <= L - 1; ++tau) {
        std::complex<double> sum = 0;
        for (int r = 0; r < M; ++r) {
          for (int i = 0; i < L; ++i) {
            int ia = i + tau;
            if (ia < 0 || ia >= L) continue;
            sum += unit[static_cast<std::size_t>(set.codes[mu].at(r, ia))] *
                   std::conj(
                       unit[static_cast<std::size_t>(set.codes[nu].at(r, i))]);
          }
        }
        row[static_cast<std::size_t>(tau + L - 1)] = sum;
      }
    }
  }
  return tensor;
}

nlohmann::json verdict_to_json(const Verdict& verdict) {
  const char* kind = "none";
  switch (verdict.kind) {
    case SetKind::Ccc: kind = "ccc"; break;
    case SetKind::Zccs: kind = "zccs"; break;
    case SetKind::Igc: kind = "igc"; break;
    case SetKind::None: break;
  }
  nlohmann::json out{
      {"kind", kind},
      {"pass", verdict.pass},
      {"measured_Z", verdict.measured_z},
      {"optimal", verdict.optimal},
      {"violation_count", verdict.violation_count},
  };
  out["violations"] = nlohmann::json::array();
  for (const Violation& v : verdict.violations) {
    out["violations"].push_back({{"mu", v.mu},
                                 {"nu", v.nu},
                                 {"tau", v.tau},
                                 {"re", v.value.real()},
                                 {"im", v.value.imag()},
                                 {"abs", std::abs(v.value)}});
  }
  return out;
}

}  // namespace zccs
