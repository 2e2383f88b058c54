#include "zccs/gbf.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace zccs {

namespace {

int mod_q(long long v, int q) {
  long long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

}  // namespace

Gbf::Gbf(int q, int num_vars) : q_(q), num_vars_(num_vars) {
  if (q < 2 || q % 2 != 0) {
    throw std::invalid_argument("Gbf: q must be even and >= 2");
  }
  if (num_vars < 0 || num_vars > kMaxVars) {
    throw std::invalid_argument("Gbf: variable count out of range");
  }
}

int Gbf::coefficient(Monomial mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0 : it->second;
}

void Gbf::add_term(Monomial mono, int coeff) {
  if (mono >> num_vars_) {
    throw std::invalid_argument("Gbf: monomial uses variables outside [0, m)");
  }
  int c = mod_q(coefficient(mono) + static_cast<long long>(coeff), q_);
  if (c == 0) {
    terms_.erase(mono);
  } else {
    terms_[mono] = c;
  }
}

int Gbf::degree() const {
  int deg = 0;
  for (const auto& [mono, coeff] : terms_) {
    deg = std::max(deg, std::popcount(mono));
  }
  return deg;
}

Gbf& Gbf::operator+=(const Gbf& other) {
  if (other.q_ != q_ || other.num_vars_ != num_vars_) {
    throw std::invalid_argument("Gbf: mismatched q or variable count");
  }
  for (const auto& [mono, coeff] : other.terms_) {
    add_term(mono, coeff);
  }
  return *this;
}

int Gbf::evaluate(std::uint32_t point) const {
  long long sum = 0;
  for (const auto& [mono, coeff] : terms_) {
    if ((point & mono) == mono) {
      sum += coeff;
    }
  }
  return mod_q(sum, q_);
}

int Gbf::evaluate(std::span<const int> bits) const {
  if (std::ssize(bits) != num_vars_) {
    throw std::invalid_argument("Gbf::evaluate: point length != num_vars");
  }
  std::uint32_t point = 0;
  for (int i = 0; i < num_vars_; ++i) {
    if (bits[i] != 0 && bits[i] != 1) {
      throw std::invalid_argument("Gbf::evaluate: point entries must be bits");
    }
    point |= static_cast<std::uint32_t>(bits[i]) << i;
  }
  return evaluate(point);
}

Gbf Gbf::substituted(const std::map<int, int>& assignment) const {
  Monomial fixed_mask = 0;
  Monomial ones_mask = 0;
  for (const auto& [idx, bit] : assignment) {
    if (idx < 0 || idx >= num_vars_) {
      throw std::invalid_argument("Gbf::substituted: index out of range");
    }
    if (bit != 0 && bit != 1) {
      throw std::invalid_argument("Gbf::substituted: values must be bits");
    }
    fixed_mask |= Monomial{1} << idx;
    if (bit) ones_mask |= Monomial{1} << idx;
  }
  Gbf out(q_, num_vars_);
  for (const auto& [mono, coeff] : terms_) {
    Monomial fixed_part = mono & fixed_mask;
    if ((fixed_part & ones_mask) != fixed_part) continue;  // a fixed 0 kills it
    out.add_term(mono & ~fixed_mask, coeff);
  }
  return out;
}

Gbf Gbf::complemented(Monomial vars) const {
  Gbf out(q_, num_vars_);
  for (const auto& [mono, coeff] : terms_) {
    Monomial flip = mono & vars;
    Monomial keep = mono & ~vars;
    // product over flipped vars of (1 - x_i), expanded by subsets
    Monomial sub = 0;
    while (true) {
      int sign = (std::popcount(sub) % 2 == 0) ? 1 : -1;
      out.add_term(keep | sub, sign * coeff);
      if (sub == flip) break;
      sub = (sub - flip) & flip;  // next subset of flip
    }
  }
  return out;
}

Gbf Gbf::complemented() const {
  Monomial all = num_vars_ == 0 ? 0 : ((Monomial{1} << num_vars_) - 1);
  return complemented(all);
}

Gbf Gbf::negated() const {
  Gbf out(q_, num_vars_);
  for (const auto& [mono, coeff] : terms_) {
    out.add_term(mono, q_ - coeff);
  }
  return out;
}

Gbf Gbf::embedded(int new_num_vars, std::span<const int> var_map) const {
  if (std::ssize(var_map) != num_vars_) {
    throw std::invalid_argument("Gbf::embedded: map length != num_vars");
  }
  Gbf out(q_, new_num_vars);
  for (const auto& [mono, coeff] : terms_) {
    Monomial mapped = 0;
    for (int i = 0; i < num_vars_; ++i) {
      if (mono & (Monomial{1} << i)) {
        if (var_map[i] < 0 || var_map[i] >= new_num_vars) {
          throw std::invalid_argument("Gbf::embedded: target index out of range");
        }
        mapped |= Monomial{1} << var_map[i];
      }
    }
    out.add_term(mapped, coeff);
  }
  return out;
}

Gbf Gbf::from_values(int q, int num_vars, std::span<const int> values) {
  std::size_t n = std::size_t{1} << num_vars;
  if (values.size() != n) {
    throw std::invalid_argument("Gbf::from_values: need 2^num_vars values");
  }
  // Moebius transform over the subset lattice, coefficients mod q.
  std::vector<int> a(values.begin(), values.end());
  for (std::size_t i = 0; i < n; ++i) a[i] = mod_q(a[i], q);
  for (int v = 0; v < num_vars; ++v) {
    std::size_t bit = std::size_t{1} << v;
    for (std::size_t mask = 0; mask < n; ++mask) {
      if (mask & bit) {
        a[mask] = mod_q(a[mask] - a[mask ^ bit], q);
      }
    }
  }
  Gbf out(q, num_vars);
  for (std::size_t mask = 0; mask < n; ++mask) {
    if (a[mask] != 0) out.add_term(static_cast<Monomial>(mask), a[mask]);
  }
  return out;
}

Gbf Gbf::parse(std::istream& in) {
  std::string line;
  int q = -1, m = -1;
  std::optional<Gbf> out;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank
    if (!out) {
      // header: q=<q> m=<m>
      if (tok.rfind("q=", 0) != 0) {
        throw std::runtime_error("gbf parse: expected header 'q=<q> m=<m>'");
      }
      q = std::stoi(tok.substr(2));
      if (!(ls >> tok) || tok.rfind("m=", 0) != 0) {
        throw std::runtime_error("gbf parse: expected 'm=' in header");
      }
      m = std::stoi(tok.substr(2));
      out.emplace(q, m);
      continue;
    }
    int coeff = std::stoi(tok);
    if (!(ls >> tok) || tok != "*") {
      throw std::runtime_error("gbf parse: expected '*' after coefficient");
    }
    Monomial mono = 0;
    while (ls >> tok) {
      if (tok.size() < 2 || tok[0] != 'x') {
        throw std::runtime_error("gbf parse: bad variable token '" + tok + "'");
      }
      int idx = std::stoi(tok.substr(1));
      if (idx < 0 || idx >= m) {
        throw std::runtime_error("gbf parse: variable index out of range");
      }
      Monomial bit = Monomial{1} << idx;
      if (mono & bit) {
        throw std::runtime_error("gbf parse: repeated variable in monomial");
      }
      mono |= bit;
    }
    out->add_term(mono, coeff);
  }
  if (!out) throw std::runtime_error("gbf parse: missing header");
  return *out;
}

Gbf Gbf::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string Gbf::to_text() const {
  std::ostringstream os;
  os << "q=" << q_ << " m=" << num_vars_ << "\n";
  for (const auto& [mono, coeff] : terms_) {
    os << coeff << " *";
    for (int i = 0; i < num_vars_; ++i) {
      if (mono & (Monomial{1} << i)) os << " x" << i;
    }
    os << "\n";
  }
  return os.str();
}

bool PhaseSequence::unimodular() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](int e) { return e == kZero; });
}

Restriction restrict_function(const Gbf& f, const std::map<int, int>& fixed) {
  for (const auto& [idx, bit] : fixed) {
    if (idx < 0 || idx >= f.num_vars()) {
      throw std::invalid_argument("restrict_function: index out of range");
    }
    if (bit != 0 && bit != 1) {
      throw std::invalid_argument("restrict_function: values must be bits");
    }
  }
  return Restriction{f, fixed};
}

PhaseSequence psi(const Gbf& f) {
  PhaseSequence seq;
  seq.q = f.q();
  std::size_t n = std::size_t{1} << f.num_vars();
  seq.entries.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    seq.entries[i] = f.evaluate(static_cast<std::uint32_t>(i));
  }
  return seq;
}

PhaseSequence psi(const Restriction& r) {
  PhaseSequence seq = psi(r.base);
  std::uint32_t mask = 0, ones = 0;
  for (const auto& [idx, bit] : r.fixed) {
    mask |= std::uint32_t{1} << idx;
    if (bit) ones |= std::uint32_t{1} << idx;
  }
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    if ((static_cast<std::uint32_t>(i) & mask) != ones) {
      seq.entries[i] = PhaseSequence::kZero;
    }
  }
  return seq;
}

int QuadraticGraph::vertex_degree(int v) const {
  int d = 0;
  for (const auto& [edge, w] : edges) {
    if (edge.first == v || edge.second == v) ++d;
  }
  return d;
}

QuadraticGraph quadratic_graph(const Gbf& f) {
  QuadraticGraph g;
  g.num_vertices = f.num_vars();
  for (const auto& [mono, coeff] : f.terms()) {
    if (std::popcount(mono) != 2) continue;
    int i = std::countr_zero(mono);
    int j = 31 - std::countl_zero(mono);
    g.edges[{i, j}] = coeff;
  }
  return g;
}

std::optional<std::vector<int>> graph_path(const QuadraticGraph& g,
                                           int required_weight) {
  if (g.edges.empty()) return std::nullopt;
  std::map<int, std::vector<int>> adj;
  for (const auto& [edge, w] : g.edges) {
    if (w != required_weight) return std::nullopt;
    adj[edge.first].push_back(edge.second);
    adj[edge.second].push_back(edge.first);
  }
  std::vector<int> ends;
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() > 2) return std::nullopt;
    if (nbrs.size() == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return std::nullopt;  // cycle or several components
  // walk from the lower end; a simple path visits every edge exactly once
  std::vector<int> order;
  int prev = -1, cur = std::min(ends[0], ends[1]);
  order.push_back(cur);
  while (true) {
    int next = -1;
    for (int nbr : adj[cur]) {
      if (nbr != prev) {
        next = nbr;
        break;
      }
    }
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (order.size() != adj.size()) return std::nullopt;  // disconnected
  return order;
}

bool is_path_over(const QuadraticGraph& g, std::span<const int> vertices,
                  int weight) {
  std::uint32_t want = 0;
  for (int v : vertices) want |= std::uint32_t{1} << v;
  std::uint32_t touched = 0;
  for (const auto& [edge, w] : g.edges) {
    touched |= std::uint32_t{1} << edge.first;
    touched |= std::uint32_t{1} << edge.second;
  }
  if (vertices.size() <= 1) return g.edges.empty();
  if ((touched | want) != want) return false;  // an edge leaves the vertex set
  auto order = graph_path(g, weight);
  return order && order->size() == vertices.size() && touched == want;
}

}  // namespace zccs
