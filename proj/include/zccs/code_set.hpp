#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zccs/correlation.hpp"

namespace zccs {

inline constexpr const char* kToolVersion = "1.0.0";

struct CodeGroup {
  std::string label;
  std::vector<std::size_t> members;  // indices into CodeSet::codes
};

struct CodeSetMeta {
  int q = 2;
  std::size_t K = 0;
  int M = 0;
  int L = 0;
  int Z = 0;            // claimed ZCZ width (L for a CCC)
  std::string kind;     // "ccc", "zccs", "igc", ...
};

struct CodeSet {
  CodeSetMeta meta;
  std::vector<PhaseMatrix> codes;
  std::vector<CodeGroup> groups;  // empty unless the set is grouped
};

// Largest Z <= L such that all code auto-correlations vanish for
// 0 < |tau| < Z and all cross-correlations vanish for |tau| < Z.
// Returns 0 when some cross-correlation is nonzero at tau = 0.
int zcz_width(const CodeSet& set);

// Header recorded at the top of every output file for reproducibility.
struct RunManifest {
  std::string command;
  std::string config;
  std::string version = kToolVersion;
  std::optional<std::uint64_t> seed;

  std::vector<std::string> header_lines() const;
};

// Plain-text code set format: '#' comment lines, "key value" header lines
// (q, kind, K, M, L, Z, optional group lines), then per code a "code <i>"
// line followed by M rows of L integers.
void write_code_set(std::ostream& out, const CodeSet& set,
                    const RunManifest* manifest = nullptr);
CodeSet read_code_set(std::istream& in);

CodeSet load_code_set(const std::string& path);
void save_code_set(const std::string& path, const CodeSet& set,
                   const RunManifest* manifest = nullptr);

}  // namespace zccs
