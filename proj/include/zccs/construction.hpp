#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zccs/code_set.hpp"
#include "zccs/gbf.hpp"

#include "json.hpp"

namespace zccs {

// Raised when a builder's structural hypothesis fails (restriction graph is
// not the required path, the seed condition is violated, ...).  Distinct
// from ConfigError so the CLI can report hypothesis failures separately.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Which end of a restriction's path becomes the gamma vertex.
enum class GammaEnd { First, Last };

// Scope of the offset delta in the seed-function condition: one delta per
// W' assignment, or a single delta across all of them.
enum class DeltaMode { PerRestriction, Global };

// Full parameterization of the direct ZCCS/IGC construction.
//
// Variable layout: the x side has m variables; indices {m-p..m-1} are the
// isolated set, J1 holds the k restricted indices, and J1' (derived) is the
// ascending complement carrying the per-restriction paths.  The u side has
// n variables partitioned into W (k indices), w_k, and the ascending
// complement W'.  The function f lives on m + (n-k-1) variables with
// u_{w'_beta} packed at position m + beta; g = f + h lives on m + n
// variables with u_alpha at position m + alpha.
struct ConstructionParams {
  int q = 4;
  int m = 0;
  int n = 0;
  int p = 0;
  std::vector<int> j1;  // J1, ascending
  std::vector<int> w;   // W, ascending
  int wk = 0;

  // per-restriction path data, keyed by the bits of c (c_alpha = bit alpha)
  std::map<std::uint32_t, std::vector<int>> pi;  // permutation of [0, m-k-p)
  std::map<std::uint32_t, GammaEnd> gamma;

  // extra coefficient tables of f, already positioned in f's variable
  // space (x_i at bit i, u_{w'_beta} at bit m+beta)
  std::map<Gbf::Monomial, int> f_terms;

  // seed function h
  std::vector<int> h_pi;      // permutation of [0, n)
  std::vector<int> h_lambda;  // affine coefficients, length n
  int h_const = 0;

  DeltaMode delta_mode = DeltaMode::PerRestriction;

  int k() const { return static_cast<int>(j1.size()); }
  int path_len() const { return m - k() - p; }       // |J1'|
  int f_vars() const { return m + n - k() - 1; }     // f's variable count
  std::vector<int> j1_prime() const;                 // ascending complement
  std::vector<int> w_prime() const;
  std::vector<int> path_permutation(std::uint32_t c) const;  // pi with default
  int gamma_vertex(std::uint32_t c) const;           // actual x index

  // Throws ConfigError on an inconsistent parameterization.
  void validate() const;
};

// The x-side function: per-restriction path terms plus all extra coefficient
// tables.  Checks that every restriction (x_J1 = c, u_W' = e) leaves a
// Hamiltonian path over J1' with edge weights q/2 and everything else
// isolated; throws HypothesisError naming the violating (c, e) otherwise.
Gbf build_f(const ConstructionParams& params);

// The u-side seed: (q/2) * sum u_{pi(a)} u_{pi(a+1)} + affine part, over n
// variables.
Gbf build_h(const ConstructionParams& params);

struct ConditionWitness {
  bool ok = true;
  std::uint32_t e = 0;       // violating W' assignment
  std::uint32_t b_low = 0;   // two (W, w_k) assignments whose values clash
  std::uint32_t b_high = 0;
  int value_low = 0;
  int value_high = 0;
};

// For each W' assignment e, the 2^{k+1} values of h over the (W, w_k) bits
// must take at most two values, and two values must differ by q/2.  In
// Global mode the admissible pair {delta, delta + q/2} is shared across all
// e.  Returns a witness describing the first violation.
ConditionWitness check_h_condition(const Gbf& h,
                                   const ConstructionParams& params);

// The direct ZCCS construction: 2^{n+p} codes of shape 2^n x 2^m with ZCZ
// width 2^{m-p}.  Codes 0..2^{n+p-1}-1 are psi(S_t); the rest are the
// conjugated counterparts psi*(S_t-bar) in the same t order.
CodeSet construct_zccs(const ConstructionParams& params);

// Same codes with the inter-group structure: group I_T collects the codes
// whose (t1, t2) bits equal T, followed by the conjugate groups.  Requires
// every coefficient coupling J1 monomials with isolated-set variables to be
// zero.
CodeSet construct_igc(const ConstructionParams& params);

// --- builders from a single second-order path GBF ---------------------

// The 2^{k+1} functions f + (q/2)(sum u_a x_{j_a} + u x_gamma) whose psi
// images form a complementary set.  Requires every restriction graph
// G(f|_{x_J=c}) to be a Hamiltonian path over the unrestricted variables
// with end vertex gamma and edge weights q/2.
std::vector<Gbf> golay_complementary_set(const Gbf& f, std::span<const int> J,
                                         int gamma);

// Complete complementary code of 2^{k+1} codes, each 2^{k+1} x 2^m.
CodeSet ccc_from_path_gbf(const Gbf& f, std::span<const int> J, int gamma);

// ZCCS of 2^{k+p+1} codes with ZCZ width 2^{m-p}; the p isolated vertices
// are the top variables {m-p..m-1}.
CodeSet zccs_from_path_gbf(const Gbf& f, std::span<const int> J, int gamma,
                           int p);

// --- configuration ------------------------------------------------------

// Parses the JSON construction config (kinds "zccs" and "igc").  Unknown
// keys are rejected; permutations default to identity, gamma to the first
// path end, coefficient tables to zero.
ConstructionParams params_from_json(const nlohmann::json& j);

struct ConstructionConfig {
  std::string kind;  // "zccs", "igc", "ccc", "zccs_path"
  ConstructionParams params;          // for zccs / igc
  Gbf f{2, 0};                        // for ccc / zccs_path
  std::vector<int> J;
  int gamma = 0;
  int p = 0;
};

ConstructionConfig parse_construction_config(const nlohmann::json& j);
CodeSet run_construction(const ConstructionConfig& config);

}  // namespace zccs
