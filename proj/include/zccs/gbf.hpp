#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zccs {

// A generalized Boolean function f: {0,1}^m -> Z_q, stored as a sum of
// monomials with coefficients in Z_q.  q must be even.  A monomial is the
// set of participating variables, packed as a bitmask (bit i == variable i).
// Coefficients are kept reduced into [1, q); zero terms are never stored.
class Gbf {
 public:
  using Monomial = std::uint32_t;

  static constexpr int kMaxVars = 24;

  Gbf(int q, int num_vars);

  int q() const { return q_; }
  int num_vars() const { return num_vars_; }
  const std::map<Monomial, int>& terms() const { return terms_; }

  // Coefficient of a monomial, 0 when absent.
  int coefficient(Monomial mono) const;

  // Adds coeff * mono, reducing mod q and dropping cancelled terms.
  void add_term(Monomial mono, int coeff);

  int degree() const;

  bool operator==(const Gbf& other) const = default;

  Gbf& operator+=(const Gbf& other);
  friend Gbf operator+(Gbf lhs, const Gbf& rhs) {
    lhs += rhs;
    return lhs;
  }

  // Value at a point given as a bitmask (bit i == value of variable i).
  int evaluate(std::uint32_t point) const;
  // Value at a point given as a bit vector; the vector length must equal
  // num_vars.  Index i of the vector is variable x_i.
  int evaluate(std::span<const int> bits) const;

  // Substitutes fixed bits (variable index -> 0/1) and expands the result
  // back to monomial form over the same variable space.  The substituted
  // variables no longer occur in any term.
  Gbf substituted(const std::map<int, int>& assignment) const;

  // Replaces x_i by 1-x_i for every variable in vars (bitmask) and expands.
  Gbf complemented(Monomial vars) const;
  // Replaces every variable: f(1-x_0, ..., 1-x_{m-1}).
  Gbf complemented() const;

  // Phase negation: coefficients c -> q-c.  psi of the result is the
  // complex conjugate of psi of *this.
  Gbf negated() const;

  // Relabels variables into a larger space: variable i becomes var_map[i].
  Gbf embedded(int new_num_vars, std::span<const int> var_map) const;

  // Recovers the unique monomial expansion from a full value table of
  // length 2^num_vars (index bitmask order).
  static Gbf from_values(int q, int num_vars, std::span<const int> values);

  // Text format:  header line "q=<q> m=<m>", then one term per line,
  // "<coeff> * x<i> x<j> ..." with the constant term written "<coeff> *".
  // Lines starting with '#' are comments.
  static Gbf parse(std::istream& in);
  static Gbf parse_string(const std::string& text);
  std::string to_text() const;

 private:
  int q_;
  int num_vars_;
  std::map<Monomial, int> terms_;
};

// A length-L vector of Z_q phases.  kZero marks entries whose complex value
// is 0 rather than a root of unity (masked positions of a restriction).
struct PhaseSequence {
  static constexpr int kZero = -1;

  int q = 2;
  std::vector<int> entries;

  std::size_t size() const { return entries.size(); }
  bool unimodular() const;  // true when no entry is kZero
};

// f together with fixed bits; psi places 0 where the fixed bits disagree.
struct Restriction {
  Gbf base;
  std::map<int, int> fixed;
};

Restriction restrict_function(const Gbf& f, const std::map<int, int>& fixed);

// psi(f): entry i is f evaluated at the bit pattern of i (bit 0 of i is x_0).
PhaseSequence psi(const Gbf& f);
PhaseSequence psi(const Restriction& r);

// Degree-2 part of a GBF as a weighted graph on the variable indices.
struct QuadraticGraph {
  int num_vertices = 0;
  // key (i, j) with i < j, value = coefficient of x_i x_j (never 0)
  std::map<std::pair<int, int>, int> edges;

  int vertex_degree(int v) const;
};

QuadraticGraph quadratic_graph(const Gbf& f);

// If the non-isolated vertices form a single simple path whose edges all
// carry required_weight, returns the path's vertex order (starting from the
// lower-indexed end); otherwise nullopt.  A graph without edges has no path.
std::optional<std::vector<int>> graph_path(const QuadraticGraph& g,
                                           int required_weight);

// True when the edges form a Hamiltonian path over exactly `vertices`
// (all edges weighted `weight`) and every other vertex is isolated.
// A single vertex counts as a path.
bool is_path_over(const QuadraticGraph& g, std::span<const int> vertices,
                  int weight);

}  // namespace zccs
