#include "zccs/construction.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace zccs {

namespace {

using Monomial = Gbf::Monomial;

std::string bits_to_string(std::uint32_t v, int len) {
  std::string s(static_cast<std::size_t>(len), '0');
  for (int i = 0; i < len; ++i) {
    if (v & (1u << i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

// Adds coeff * base_mono * prod_a (x_{j_a} if bit a of pattern else 1-x_{j_a})
// expanded into monomials.
void add_with_indicator(Gbf& acc, int coeff, Monomial base_mono,
                        std::span<const int> j1, std::uint32_t pattern) {
  Monomial ones = 0, zeros = 0;
  for (std::size_t a = 0; a < j1.size(); ++a) {
    Monomial bit = Monomial{1} << j1[a];
    if (pattern & (1u << a)) {
      ones |= bit;
    } else {
      zeros |= bit;
    }
  }
  Monomial sub = 0;
  while (true) {
    int sign = (std::popcount(sub) % 2 == 0) ? 1 : -1;
    acc.add_term(base_mono | ones | sub, sign * coeff);
    if (sub == zeros) break;
    sub = (sub - zeros) & zeros;
  }
}

PhaseMatrix evaluate_code(const Gbf& g, int m, int n) {
  PhaseMatrix out(g.q(), 1 << n, 1 << m);
  for (int r = 0; r < out.rows; ++r) {
    std::uint32_t ubits = static_cast<std::uint32_t>(r) << m;
    for (int i = 0; i < out.cols; ++i) {
      out.at(r, i) = g.evaluate(static_cast<std::uint32_t>(i) | ubits);
    }
  }
  return out;
}

enum class TermShape {
  Constant,
  Affine,       // single x variable
  RestrictedOnly,  // >= 2 J1 variables
  PathCross,    // J1 monomial times one path variable
  IsolatedCross,   // J1 monomial times one isolated variable (must vanish for IGC)
  SeedCross,    // J1 monomial times one u_{w'} variable
  Bilinear,     // one x variable times one u_{w'} variable
  Invalid,
};

TermShape classify_f_term(const ConstructionParams& params, Monomial mono) {
  const int m = params.m;
  Monomial x_mask = (Monomial{1} << m) - 1;
  Monomial j1_mask = 0;
  for (int j : params.j1) j1_mask |= Monomial{1} << j;
  Monomial z_mask = 0;
  for (int z = m - params.p; z < m; ++z) z_mask |= Monomial{1} << z;

  Monomial xpart = mono & x_mask;
  Monomial upart = mono & ~x_mask;
  int ubits = std::popcount(upart);
  int xbits = std::popcount(xpart);

  if (ubits >= 2) return TermShape::Invalid;
  if (ubits == 1) {
    if (xbits == 0) return TermShape::Invalid;  // affine u terms belong to h
    if (xbits == 1) return TermShape::Bilinear;
    if ((xpart & ~j1_mask) == 0) return TermShape::SeedCross;
    return TermShape::Invalid;
  }
  if (xbits == 0) return TermShape::Constant;
  if (xbits == 1) return TermShape::Affine;
  Monomial outside = xpart & ~j1_mask;
  if (outside == 0) return TermShape::RestrictedOnly;
  if (std::popcount(outside) == 1 && (xpart & j1_mask) != 0) {
    if (outside & z_mask) return TermShape::IsolatedCross;
    return TermShape::PathCross;
  }
  return TermShape::Invalid;
}

}  // namespace

std::vector<int> ConstructionParams::j1_prime() const {
  std::set<int> excluded(j1.begin(), j1.end());
  std::vector<int> out;
  for (int i = 0; i < m - p; ++i) {
    if (!excluded.count(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> ConstructionParams::w_prime() const {
  std::set<int> excluded(w.begin(), w.end());
  excluded.insert(wk);
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (!excluded.count(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> ConstructionParams::path_permutation(std::uint32_t c) const {
  auto it = pi.find(c);
  if (it != pi.end()) return it->second;
  std::vector<int> ident(static_cast<std::size_t>(path_len()));
  std::iota(ident.begin(), ident.end(), 0);
  return ident;
}

int ConstructionParams::gamma_vertex(std::uint32_t c) const {
  auto perm = path_permutation(c);
  auto ends = gamma.find(c);
  GammaEnd which = ends == gamma.end() ? GammaEnd::First : ends->second;
  int pos = which == GammaEnd::First ? perm.front() : perm.back();
  return j1_prime()[static_cast<std::size_t>(pos)];
}

void ConstructionParams::validate() const {
  auto fail = [](const std::string& msg) -> void { throw ConfigError(msg); };
  if (q < 2 || q % 2 != 0) fail("q must be even and >= 2");
  if (m < 1) fail("m must be >= 1");
  const int kk = k();
  if (p < 0 || p > m - kk - 1) fail("need 0 <= p <= m-k-1");
  if (n < kk + 1) fail("need n >= k+1");
  if (static_cast<int>(w.size()) != kk) fail("|W| must equal |J1|");

  std::set<int> j1set(j1.begin(), j1.end());
  if (static_cast<int>(j1set.size()) != kk) fail("J1 indices must be distinct");
  if (!std::is_sorted(j1.begin(), j1.end())) fail("J1 must be ascending");
  for (int j : j1) {
    if (j < 0 || j >= m - p) fail("J1 indices must avoid the isolated set");
  }
  std::set<int> wset(w.begin(), w.end());
  if (static_cast<int>(wset.size()) != kk) fail("W indices must be distinct");
  for (int idx : w) {
    if (idx < 0 || idx >= n) fail("W indices out of range");
  }
  if (wk < 0 || wk >= n || wset.count(wk)) fail("w_k must lie in [0,n) outside W");

  const int plen = path_len();
  for (const auto& [c, perm] : pi) {
    if (c >> kk) fail("pi key outside {0,1}^k");
    if (static_cast<int>(perm.size()) != plen) fail("pi permutation has wrong length");
    std::set<int> seen(perm.begin(), perm.end());
    if (static_cast<int>(seen.size()) != plen || *seen.begin() != 0 ||
        *seen.rbegin() != plen - 1) {
      fail("pi value is not a permutation of [0, m-k-p)");
    }
  }
  for (const auto& [c, g] : gamma) {
    (void)g;
    if (c >> kk) fail("gamma key outside {0,1}^k");
  }
  if (static_cast<int>(h_pi.size()) != n) fail("h permutation has wrong length");
  {
    std::set<int> seen(h_pi.begin(), h_pi.end());
    if (static_cast<int>(seen.size()) != n ||
        (n > 0 && (*seen.begin() != 0 || *seen.rbegin() != n - 1))) {
      fail("h permutation is not a permutation of [0, n)");
    }
  }
  if (static_cast<int>(h_lambda.size()) != n) fail("h affine part has wrong length");
  for (const auto& [mono, coeff] : f_terms) {
    (void)coeff;
    if (mono >> f_vars()) fail("f term uses variables outside f's space");
    if (classify_f_term(*this, mono) == TermShape::Invalid) {
      fail("f term does not fit the construction's coefficient family");
    }
  }
}

Gbf build_f(const ConstructionParams& params) {
  const int kk = params.k();
  const int plen = params.path_len();
  const auto j1p = params.j1_prime();
  Gbf f(params.q, params.f_vars());
  const int half = params.q / 2;

  for (std::uint32_t c = 0; c < (1u << kk); ++c) {
    auto perm = params.path_permutation(c);
    for (int a = 0; a + 1 < plen; ++a) {
      Monomial edge = (Monomial{1} << j1p[static_cast<std::size_t>(perm[a])]) |
                      (Monomial{1} << j1p[static_cast<std::size_t>(perm[a + 1])]);
      add_with_indicator(f, half, edge, params.j1, c);
    }
  }
  for (const auto& [mono, coeff] : params.f_terms) {
    f.add_term(mono, coeff);
  }

  // Every restriction must leave a Hamiltonian path over J1' (weight q/2)
  // with all other vertices isolated.
  const int wp_count = params.n - kk - 1;
  for (std::uint32_t c = 0; c < (1u << kk); ++c) {
    for (std::uint32_t e = 0; e < (1u << wp_count); ++e) {
      std::map<int, int> fix;
      for (int a = 0; a < kk; ++a) fix[params.j1[a]] = (c >> a) & 1;
      for (int b = 0; b < wp_count; ++b) fix[params.m + b] = (e >> b) & 1;
      Gbf sub = f.substituted(fix);
      if (!is_path_over(quadratic_graph(sub), j1p, half)) {
        std::ostringstream msg;
        msg << "restriction x_J1=" << bits_to_string(c, kk) << ", u_W'="
            << bits_to_string(e, wp_count)
            << " does not leave a weight-q/2 Hamiltonian path over J1'";
        throw HypothesisError(msg.str());
      }
    }
  }
  return f;
}

Gbf build_h(const ConstructionParams& params) {
  Gbf h(params.q, params.n);
  const int half = params.q / 2;
  for (int a = 0; a + 1 < params.n; ++a) {
    Monomial edge = (Monomial{1} << params.h_pi[static_cast<std::size_t>(a)]) |
                    (Monomial{1} << params.h_pi[static_cast<std::size_t>(a + 1)]);
    h.add_term(edge, half);
  }
  for (int a = 0; a < params.n; ++a) {
    h.add_term(Monomial{1} << a, params.h_lambda[static_cast<std::size_t>(a)]);
  }
  h.add_term(0, params.h_const);
  return h;
}

ConditionWitness check_h_condition(const Gbf& h,
                                   const ConstructionParams& params) {
  const int kk = params.k();
  const int wp_count = params.n - kk - 1;
  const auto wp = params.w_prime();
  const int half = params.q / 2;

  int global_rep = -1;
  std::uint32_t global_b = 0;
  int global_value = 0;
  for (std::uint32_t e = 0; e < (1u << wp_count); ++e) {
    std::uint32_t u_base = 0;
    for (int b = 0; b < wp_count; ++b) {
      if ((e >> b) & 1) u_base |= 1u << wp[static_cast<std::size_t>(b)];
    }
    int local_rep = -1;  // value reduced mod q/2; equal reps <=> gap 0 or q/2
    std::uint32_t local_b = 0;
    int local_value = 0;
    for (std::uint32_t bb = 0; bb < (1u << (kk + 1)); ++bb) {
      std::uint32_t u = u_base;
      for (int a = 0; a < kk; ++a) {
        if ((bb >> a) & 1) u |= 1u << params.w[static_cast<std::size_t>(a)];
      }
      if ((bb >> kk) & 1) u |= 1u << params.wk;
      int value = h.evaluate(u);
      int rep = value % half;
      if (local_rep < 0) {
        local_rep = rep;
        local_b = bb;
        local_value = value;
      } else if (rep != local_rep) {
        return ConditionWitness{false, e, local_b, bb, local_value, value};
      }
      if (params.delta_mode == DeltaMode::Global) {
        if (global_rep < 0) {
          global_rep = rep;
          global_b = bb;
          global_value = value;
        } else if (rep != global_rep) {
          return ConditionWitness{false, e, global_b, bb, global_value, value};
        }
      }
    }
  }
  return ConditionWitness{};
}

namespace {

struct BuilderPieces {
  Gbf g;          // f + h over m+n variables
  Gbf g_bar;      // x-complemented f plus h
  Gbf mask_s;     // t-independent masks of S_t
  Gbf mask_sbar;  // t-independent masks of the counterpart code
};

BuilderPieces assemble_pieces(const ConstructionParams& params, const Gbf& f,
                              const Gbf& h) {
  const int m = params.m;
  const int n = params.n;
  const int kk = params.k();
  const int half = params.q / 2;
  const auto wp = params.w_prime();

  std::vector<int> f_map(static_cast<std::size_t>(params.f_vars()));
  for (int i = 0; i < m; ++i) f_map[static_cast<std::size_t>(i)] = i;
  for (std::size_t b = 0; b < wp.size(); ++b) {
    f_map[static_cast<std::size_t>(m) + b] = m + wp[b];
  }
  std::vector<int> h_map(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) h_map[static_cast<std::size_t>(a)] = m + a;

  Monomial f_x_mask = (Monomial{1} << m) - 1;

  BuilderPieces pieces{
      f.embedded(m + n, f_map) + h.embedded(m + n, h_map),
      f.complemented(f_x_mask).embedded(m + n, f_map) + h.embedded(m + n, h_map),
      Gbf(params.q, m + n), Gbf(params.q, m + n)};

  for (int a = 0; a < kk; ++a) {
    Monomial cross = (Monomial{1} << params.j1[static_cast<std::size_t>(a)]) |
                     (Monomial{1} << (m + params.w[static_cast<std::size_t>(a)]));
    // u_{w_a} x_{j_a}
    pieces.mask_s.add_term(cross, half);
    // u_{w_a} (1 - x_{j_a})
    pieces.mask_sbar.add_term(
        Monomial{1} << (m + params.w[static_cast<std::size_t>(a)]), half);
    pieces.mask_sbar.add_term(cross, -half);
  }
  Monomial uwk = Monomial{1} << (m + params.wk);
  for (std::uint32_t c = 0; c < (1u << kk); ++c) {
    Monomial g_mono = Monomial{1} << params.gamma_vertex(c);
    // u_{w_k} x_{gamma_c} on the slice x_J1 = c
    add_with_indicator(pieces.mask_s, half, g_mono | uwk, params.j1, c);
    // (1 - u_{w_k}) x_{gamma_c} on the complemented slice x_J1 = ~c
    std::uint32_t cbar = ~c & ((1u << kk) - 1);
    add_with_indicator(pieces.mask_sbar, half, g_mono, params.j1, cbar);
    add_with_indicator(pieces.mask_sbar, -half, g_mono | uwk, params.j1, cbar);
  }
  return pieces;
}

void add_shift_masks(Gbf& fn, const ConstructionParams& params,
                     std::uint32_t t, bool complemented) {
  const int kk = params.k();
  const int half = params.q / 2;
  const auto wp = params.w_prime();
  auto add_bit = [&](int var, bool on, bool flip) {
    if (!on) return;
    if (flip) {
      fn.add_term(0, half);
      fn.add_term(Monomial{1} << var, -half);
    } else {
      fn.add_term(Monomial{1} << var, half);
    }
  };
  for (int a = 0; a < kk; ++a) {
    add_bit(params.j1[static_cast<std::size_t>(a)], (t >> a) & 1, complemented);
  }
  for (int a = 0; a < params.n - kk - 1; ++a) {
    add_bit(params.m + wp[static_cast<std::size_t>(a)], (t >> (kk + a)) & 1,
            false);
  }
  for (int a = 0; a < params.p; ++a) {
    add_bit(params.m - params.p + a, (t >> (params.n - 1 + a)) & 1,
            complemented);
  }
}

CodeSet construct_codes(const ConstructionParams& params) {
  params.validate();
  if (params.m + params.n > Gbf::kMaxVars) {
    throw ConfigError("m + n too large (limit 24)");
  }
  Gbf f = build_f(params);
  Gbf h = build_h(params);
  ConditionWitness cw = check_h_condition(h, params);
  if (!cw.ok) {
    std::ostringstream msg;
    msg << "seed condition fails at u_W'="
        << bits_to_string(cw.e, params.n - params.k() - 1) << ": values "
        << cw.value_low << " and " << cw.value_high
        << " do not differ by 0 or q/2";
    throw HypothesisError(msg.str());
  }
  BuilderPieces pieces = assemble_pieces(params, f, h);

  CodeSet set;
  const std::uint32_t half_count = 1u << (params.n + params.p - 1);
  set.meta = CodeSetMeta{params.q, 2 * half_count, 1 << params.n,
                         1 << params.m, 1 << (params.m - params.p), "zccs"};
  set.codes.reserve(2 * half_count);
  for (std::uint32_t t = 0; t < half_count; ++t) {
    Gbf fn = pieces.g + pieces.mask_s;
    add_shift_masks(fn, params, t, false);
    set.codes.push_back(evaluate_code(fn, params.m, params.n));
  }
  for (std::uint32_t t = 0; t < half_count; ++t) {
    Gbf fn = pieces.g_bar + pieces.mask_sbar;
    add_shift_masks(fn, params, t, true);
    set.codes.push_back(
        evaluate_code(fn, params.m, params.n).conjugated());
  }
  return set;
}

}  // namespace

CodeSet construct_zccs(const ConstructionParams& params) {
  return construct_codes(params);
}

CodeSet construct_igc(const ConstructionParams& params) {
  params.validate();
  // The inter-group zeros need every isolated variable decoupled from the
  // rest of the function: a J1 x isolated coefficient breaks the
  // different-t1 branch, and an isolated x W' coefficient makes the
  // isolated variables' restricted affine coefficients slice-dependent,
  // which breaks the different-t2 branch at shifts beyond the zone.
  Monomial z_mask = 0;
  for (int z = params.m - params.p; z < params.m; ++z) {
    z_mask |= Monomial{1} << z;
  }
  for (const auto& [mono, coeff] : params.f_terms) {
    (void)coeff;
    if ((mono & z_mask) != 0 && (mono & ~z_mask) != 0) {
      throw HypothesisError(
          "inter-group construction requires all coefficients coupling an "
          "isolated variable with other variables to vanish");
    }
  }
  CodeSet set = construct_codes(params);
  set.meta.kind = "igc";

  const std::uint32_t half_count = 1u << (params.n + params.p - 1);
  const std::uint32_t group_count = 1u << (params.n - 1);
  const std::uint32_t group_size = 1u << params.p;
  for (std::uint32_t T = 0; T < group_count; ++T) {
    CodeGroup grp;
    grp.label = "I_" + std::to_string(T);
    for (std::uint32_t t3 = 0; t3 < group_size; ++t3) {
      grp.members.push_back(T + (t3 << (params.n - 1)));
    }
    set.groups.push_back(std::move(grp));
  }
  for (std::uint32_t T = 0; T < group_count; ++T) {
    CodeGroup grp;
    grp.label = "I*_" + std::to_string(T);
    for (std::uint32_t t3 = 0; t3 < group_size; ++t3) {
      grp.members.push_back(half_count + T + (t3 << (params.n - 1)));
    }
    set.groups.push_back(std::move(grp));
  }
  return set;
}

namespace {

// Shared hypothesis check for the single-GBF builders: every restriction
// graph must be a Hamiltonian path over the unrestricted, non-isolated
// variables with x_gamma as an end and edge weights q/2.
void check_path_gbf(const Gbf& f, std::span<const int> J, int gamma, int p) {
  const int m = f.num_vars();
  const int kk = static_cast<int>(J.size());
  std::set<int> jset(J.begin(), J.end());
  if (static_cast<int>(jset.size()) != kk) {
    throw ConfigError("J indices must be distinct");
  }
  for (int j : J) {
    if (j < 0 || j >= m) throw ConfigError("J index out of range");
  }
  if (p < 0 || p > m - kk - 1) throw ConfigError("need 0 <= p <= m-k-1");
  for (int z = m - p; z < m; ++z) {
    if (jset.count(z)) throw ConfigError("J must avoid the isolated variables");
  }
  if (gamma < 0 || gamma >= m - p || jset.count(gamma)) {
    throw ConfigError("gamma must be an unrestricted, non-isolated variable");
  }
  if (f.degree() > 2) {
    throw HypothesisError("builder requires a second-order function");
  }
  std::vector<int> path_vertices;
  for (int v = 0; v < m - p; ++v) {
    if (!jset.count(v)) path_vertices.push_back(v);
  }
  for (std::uint32_t c = 0; c < (1u << kk); ++c) {
    std::map<int, int> fix;
    for (int a = 0; a < kk; ++a) fix[J[static_cast<std::size_t>(a)]] = (c >> a) & 1;
    Gbf sub = f.substituted(fix);
    QuadraticGraph graph = quadratic_graph(sub);
    if (!is_path_over(graph, path_vertices, f.q() / 2)) {
      std::ostringstream msg;
      msg << "restriction x_J=" << bits_to_string(c, kk)
          << " does not leave a weight-q/2 path over the free variables";
      throw HypothesisError(msg.str());
    }
    if (path_vertices.size() >= 2) {
      auto order = graph_path(graph, f.q() / 2);
      if (order->front() != gamma && order->back() != gamma) {
        std::ostringstream msg;
        msg << "x_" << gamma << " is not an end vertex of the restriction x_J="
            << bits_to_string(c, kk);
        throw HypothesisError(msg.str());
      }
    }
  }
}

}  // namespace

std::vector<Gbf> golay_complementary_set(const Gbf& f, std::span<const int> J,
                                         int gamma) {
  check_path_gbf(f, J, gamma, 0);
  const int kk = static_cast<int>(J.size());
  const int half = f.q() / 2;
  std::vector<Gbf> out;
  out.reserve(std::size_t{1} << (kk + 1));
  for (std::uint32_t u = 0; u < (1u << (kk + 1)); ++u) {
    Gbf fn = f;
    for (int a = 0; a < kk; ++a) {
      if ((u >> a) & 1) fn.add_term(Monomial{1} << J[static_cast<std::size_t>(a)], half);
    }
    if ((u >> kk) & 1) fn.add_term(Monomial{1} << gamma, half);
    out.push_back(std::move(fn));
  }
  return out;
}

CodeSet ccc_from_path_gbf(const Gbf& f, std::span<const int> J, int gamma) {
  CodeSet set = zccs_from_path_gbf(f, J, gamma, 0);
  set.meta.kind = "ccc";
  return set;
}

CodeSet zccs_from_path_gbf(const Gbf& f, std::span<const int> J, int gamma,
                           int p) {
  check_path_gbf(f, J, gamma, p);
  const int m = f.num_vars();
  const int kk = static_cast<int>(J.size());
  const int half = f.q() / 2;
  const int rows = 1 << (kk + 1);
  const Gbf f_bar = f.complemented();

  CodeSet set;
  const std::uint32_t shift_count = 1u << (kk + p);
  set.meta = CodeSetMeta{f.q(), 2 * shift_count, rows, 1 << m, 1 << (m - p),
                         "zccs"};

  auto build_code = [&](std::uint32_t t, bool bar) {
    PhaseMatrix code(f.q(), rows, 1 << m);
    for (int r = 0; r < rows; ++r) {
      Gbf fn = bar ? f_bar : f;
      auto add_mask = [&](int var, bool on, bool flip) {
        if (!on) return;
        if (flip) {
          fn.add_term(0, half);
          fn.add_term(Monomial{1} << var, -half);
        } else {
          fn.add_term(Monomial{1} << var, half);
        }
      };
      for (int a = 0; a < kk; ++a) {
        int j = J[static_cast<std::size_t>(a)];
        add_mask(j, (r >> a) & 1, bar);   // u_a x_j (or the complement)
        add_mask(j, (t >> a) & 1, bar);   // t_a x_j
      }
      for (int a = 0; a < p; ++a) {
        add_mask(m - p + a, (t >> (kk + a)) & 1, bar);
      }
      bool u_k = (r >> kk) & 1;
      add_mask(gamma, bar ? !u_k : u_k, false);  // x_gamma never complemented
      PhaseSequence row = psi(fn);
      for (int i = 0; i < code.cols; ++i) code.at(r, i) = row.entries[static_cast<std::size_t>(i)];
    }
    return bar ? code.conjugated() : code;
  };

  for (std::uint32_t t = 0; t < shift_count; ++t) {
    set.codes.push_back(build_code(t, false));
  }
  for (std::uint32_t t = 0; t < shift_count; ++t) {
    set.codes.push_back(build_code(t, true));
  }
  return set;
}

namespace {

void reject_unknown_keys(const nlohmann::json& j,
                         const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

std::uint32_t parse_c_key(const std::string& key, int k) {
  if (static_cast<int>(key.size()) != k) {
    throw ConfigError("restriction key '" + key + "' must have k bits");
  }
  std::uint32_t c = 0;
  for (int i = 0; i < k; ++i) {
    char ch = key[static_cast<std::size_t>(i)];
    if (ch == '1') {
      c |= 1u << i;
    } else if (ch != '0') {
      throw ConfigError("restriction key '" + key + "' must be a bit string");
    }
  }
  return c;
}

// Monomial strings: space-separated "x<i>" / "u<j>" factors; "1" (or empty)
// denotes the constant term.  u variables must belong to W' and are packed
// at position m + (index of j within W').
Gbf::Monomial parse_monomial_key(const std::string& key,
                                 const ConstructionParams& params,
                                 bool allow_u) {
  if (key == "1" || key.empty()) return 0;
  std::istringstream in(key);
  std::string tok;
  Gbf::Monomial mono = 0;
  const auto wp = params.w_prime();
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'u')) {
      throw ConfigError("bad monomial factor '" + tok + "'");
    }
    int idx;
    try {
      std::size_t used = 0;
      idx = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ConfigError("bad monomial factor '" + tok + "'");
    }
    int var;
    if (tok[0] == 'x') {
      if (idx < 0 || idx >= params.m) {
        throw ConfigError("monomial variable '" + tok + "' out of range");
      }
      var = idx;
    } else {
      if (!allow_u) throw ConfigError("u variables not allowed here");
      auto it = std::find(wp.begin(), wp.end(), idx);
      if (it == wp.end()) {
        throw ConfigError("monomial variable '" + tok + "' is not in W'");
      }
      var = params.m + static_cast<int>(it - wp.begin());
    }
    Gbf::Monomial bit = Gbf::Monomial{1} << var;
    if (mono & bit) throw ConfigError("repeated variable in monomial '" + key + "'");
    mono |= bit;
  }
  return mono;
}

}  // namespace

ConstructionParams params_from_json(const nlohmann::json& j) {
  reject_unknown_keys(j, {"kind", "q", "m", "n", "p", "J1", "W", "wk", "pi",
                          "gamma", "f_terms", "h_pi", "h_lambda", "h_const",
                          "delta_mode"});
  ConstructionParams params;
  params.q = j.at("q").get<int>();
  params.m = j.at("m").get<int>();
  params.n = j.at("n").get<int>();
  params.p = j.value("p", 0);
  params.j1 = j.value("J1", std::vector<int>{});
  if (!std::is_sorted(params.j1.begin(), params.j1.end())) {
    throw ConfigError("J1 must be listed in ascending order");
  }
  const int k = params.k();
  if (j.contains("W")) {
    params.w = j.at("W").get<std::vector<int>>();
  } else {
    params.w.resize(static_cast<std::size_t>(k));
    std::iota(params.w.begin(), params.w.end(), 0);
  }
  params.wk = j.value("wk", k);

  if (j.contains("pi")) {
    for (const auto& [key, value] : j.at("pi").items()) {
      params.pi[parse_c_key(key, k)] = value.get<std::vector<int>>();
    }
  }
  if (j.contains("gamma")) {
    for (const auto& [key, value] : j.at("gamma").items()) {
      std::string which = value.get<std::string>();
      if (which != "first" && which != "last") {
        throw ConfigError("gamma values must be 'first' or 'last'");
      }
      params.gamma[parse_c_key(key, k)] =
          which == "first" ? GammaEnd::First : GammaEnd::Last;
    }
  }
  if (j.contains("h_pi")) {
    params.h_pi = j.at("h_pi").get<std::vector<int>>();
  } else {
    params.h_pi.resize(static_cast<std::size_t>(params.n));
    std::iota(params.h_pi.begin(), params.h_pi.end(), 0);
  }
  params.h_lambda = j.value("h_lambda", std::vector<int>(static_cast<std::size_t>(params.n), 0));
  params.h_const = j.value("h_const", 0);
  if (j.contains("delta_mode")) {
    std::string mode = j.at("delta_mode").get<std::string>();
    if (mode == "global") {
      params.delta_mode = DeltaMode::Global;
    } else if (mode != "per_restriction") {
      throw ConfigError("delta_mode must be 'per_restriction' or 'global'");
    }
  }
  if (j.contains("f_terms")) {
    for (const auto& [key, value] : j.at("f_terms").items()) {
      Gbf::Monomial mono = parse_monomial_key(key, params, true);
      int coeff = ((value.get<int>() % params.q) + params.q) % params.q;
      if (coeff != 0) {
        params.f_terms[mono] = coeff;
      } else {
        params.f_terms.erase(mono);
      }
    }
  }
  params.validate();
  return params;
}

ConstructionConfig parse_construction_config(const nlohmann::json& j) {
  ConstructionConfig config;
  config.kind = j.at("kind").get<std::string>();
  if (config.kind == "zccs" || config.kind == "igc") {
    config.params = params_from_json(j);
    return config;
  }
  if (config.kind != "ccc" && config.kind != "zccs_path") {
    throw ConfigError("unknown construction kind '" + config.kind + "'");
  }
  reject_unknown_keys(j, {"kind", "q", "m", "f_terms", "J", "gamma", "p"});
  int q = j.at("q").get<int>();
  int m = j.at("m").get<int>();
  config.f = Gbf(q, m);
  ConstructionParams scratch;  // only for monomial parsing (x variables)
  scratch.q = q;
  scratch.m = m;
  scratch.n = 1;
  for (const auto& [key, value] : j.at("f_terms").items()) {
    config.f.add_term(parse_monomial_key(key, scratch, false),
                      value.get<int>());
  }
  config.J = j.value("J", std::vector<int>{});
  config.gamma = j.at("gamma").get<int>();
  config.p = config.kind == "zccs_path" ? j.at("p").get<int>() : 0;
  return config;
}

CodeSet run_construction(const ConstructionConfig& config) {
  if (config.kind == "zccs") return construct_zccs(config.params);
  if (config.kind == "igc") return construct_igc(config.params);
  if (config.kind == "ccc") {
    return ccc_from_path_gbf(config.f, config.J, config.gamma);
  }
  return zccs_from_path_gbf(config.f, config.J, config.gamma, config.p);
}

}  // namespace zccs
