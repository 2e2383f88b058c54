#include "zccs/code_set.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zccs {

int zcz_width(const CodeSet& set) {
  if (set.codes.empty()) {
    throw std::invalid_argument("zcz_width: empty code set");
  }
  const int L = set.meta.L;
  int width = L;
  for (std::size_t mu = 0; mu < set.codes.size(); ++mu) {
    for (std::size_t nu = 0; nu < set.codes.size(); ++nu) {
      int start = (mu == nu) ? 1 : 0;
      for (int tau = start; tau < width; ++tau) {
        if (!code_correlation(set.codes[mu], set.codes[nu], tau).is_zero()) {
          width = tau;
          break;
        }
      }
      if (width == 0) return 0;
    }
  }
  return width;
}

std::vector<std::string> RunManifest::header_lines() const {
  std::vector<std::string> lines;
  lines.push_back("tool: zccs " + version);
  if (!command.empty()) lines.push_back("command: " + command);
  if (!config.empty()) lines.push_back("config: " + config);
  if (seed) lines.push_back("seed: " + std::to_string(*seed));
  return lines;
}

void write_code_set(std::ostream& out, const CodeSet& set,
                    const RunManifest* manifest) {
  if (manifest) {
    for (const auto& line : manifest->header_lines()) out << "# " << line << "\n";
  }
  out << "q " << set.meta.q << "\n";
  out << "kind " << set.meta.kind << "\n";
  out << "K " << set.meta.K << "\n";
  out << "M " << set.meta.M << "\n";
  out << "L " << set.meta.L << "\n";
  out << "Z " << set.meta.Z << "\n";
  if (!set.groups.empty()) {
    out << "groups " << set.groups.size() << "\n";
    for (std::size_t g = 0; g < set.groups.size(); ++g) {
      out << "group " << g << " label " << set.groups[g].label << " codes";
      for (std::size_t idx : set.groups[g].members) out << " " << idx;
      out << "\n";
    }
  }
  for (std::size_t i = 0; i < set.codes.size(); ++i) {
    const PhaseMatrix& c = set.codes[i];
    out << "code " << i << "\n";
    for (int r = 0; r < c.rows; ++r) {
      for (int col = 0; col < c.cols; ++col) {
        if (col) out << " ";
        out << c.at(r, col);
      }
      out << "\n";
    }
  }
}

CodeSet read_code_set(std::istream& in) {
  CodeSet set;
  std::string line;
  bool in_codes = false;
  std::size_t expect_index = 0;
  int pending_rows = 0;
  auto fail = [](const std::string& msg) -> void {
    throw std::runtime_error("code set parse: " + msg);
  };
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (pending_rows > 0) {
      // key is the first entry of a code row
      PhaseMatrix& c = set.codes.back();
      int r = c.rows - pending_rows;
      c.at(r, 0) = std::stoi(key);
      for (int col = 1; col < c.cols; ++col) {
        int v;
        if (!(ls >> v)) fail("short code row");
        c.at(r, col) = v;
      }
      int extra;
      if (ls >> extra) fail("code row longer than L");
      --pending_rows;
      continue;
    }
    if (key == "q") { ls >> set.meta.q; }
    else if (key == "kind") { ls >> set.meta.kind; }
    else if (key == "K") { ls >> set.meta.K; }
    else if (key == "M") { ls >> set.meta.M; }
    else if (key == "L") { ls >> set.meta.L; }
    else if (key == "Z") { ls >> set.meta.Z; }
    else if (key == "groups") {
      std::size_t n;
      ls >> n;
      set.groups.reserve(n);
    }
    else if (key == "group") {
      std::size_t idx;
      std::string tok;
      CodeGroup grp;
      if (!(ls >> idx >> tok) || tok != "label") fail("bad group line");
      if (!(ls >> grp.label >> tok) || tok != "codes") fail("bad group line");
      std::size_t member;
      while (ls >> member) grp.members.push_back(member);
      if (idx != set.groups.size()) fail("group indices out of order");
      set.groups.push_back(std::move(grp));
    }
    else if (key == "code") {
      if (set.meta.M <= 0 || set.meta.L <= 0) fail("code block before M/L header");
      std::size_t idx;
      if (!(ls >> idx) || idx != expect_index) fail("code indices out of order");
      ++expect_index;
      set.codes.emplace_back(set.meta.q, set.meta.M, set.meta.L);
      pending_rows = set.meta.M;
      in_codes = true;
    }
    else {
      fail("unknown header key '" + key + "'");
    }
  }
  if (pending_rows > 0) fail("truncated code block");
  if (!in_codes) fail("no code blocks");
  if (set.meta.K != set.codes.size()) fail("K does not match code count");
  for (const PhaseMatrix& c : set.codes) {
    for (int v : c.data) {
      if (v < 0 || v >= set.meta.q) fail("phase entry outside [0, q)");
    }
  }
  for (const CodeGroup& g : set.groups) {
    for (std::size_t m : g.members) {
      if (m >= set.codes.size()) fail("group member out of range");
    }
  }
  return set;
}

CodeSet load_code_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code set file: " + path);
  return read_code_set(in);
}

void save_code_set(const std::string& path, const CodeSet& set,
                   const RunManifest* manifest) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write code set file: " + path);
  write_code_set(out, set, manifest);
}

}  // namespace zccs
