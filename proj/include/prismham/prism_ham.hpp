#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prismham/cycles.hpp"
#include "prismham/graph.hpp"
#include "prismham/invariants.hpp"
#include "prismham/parity_triangle.hpp"

namespace prismham {

// Prism vertex (v, layer) is numbered v + layer * n.
struct PrismVertex {
  int base = 0;
  int layer = 0;
  friend bool operator==(const PrismVertex&, const PrismVertex&) = default;
};

inline PrismVertex prism_vertex(int prism_index, int n) {
  return {prism_index % n, prism_index / n};
}

// G x K2: two copies of g plus a rung at every vertex.
inline Graph prism(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxVertices / 2)
    throw std::invalid_argument("prism: base graph too large");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * g.edge_count() + n));
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(u + n, v + n);
  }
  for (int v = 0; v < n; ++v) edges.emplace_back(v, v + n);
  return Graph(2 * n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Hamiltonian cycle search

enum class HamStatus { found, refuted, unknown };

struct HamResult {
  HamStatus status = HamStatus::refuted;
  std::optional<Cycle> cycle;
  std::uint64_t nodes = 0;  // backtrack nodes spent
};

// Backtracking anchored at vertex 0 with ascending branch order.  Prunes:
// an unvisited vertex with fewer than 2 usable connections kills the branch,
// so does the unvisited region falling apart, and a unique forced move at a
// degree-2 situation is taken without branching.  Graphs with fewer than 3
// vertices have no cycle at all and are refuted outright.
inline HamResult find_hamiltonian_cycle(const Graph& g,
                                        std::uint64_t budget = 100'000'000) {
  const int n = g.vertex_count();
  HamResult res;
  if (n < 3) return res;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return res;

  const std::uint64_t all = VertexSet::full(n).bits;
  std::vector<int> path{0};
  std::uint64_t visited = 1;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::optional<std::vector<int>> found;

  auto dfs = [&](auto&& self, int cur) -> bool {  // true stops the search
    if (++nodes > budget) {
      aborted = true;
      return true;
    }
    const std::uint64_t unvisited = all & ~visited;
    if (!unvisited) {
      if (g.has_edge(cur, 0)) {
        found = path;
        return true;
      }
      return false;
    }
    if (!(g.neighbors(0) & unvisited)) return false;  // no way back to the anchor
    // Degree-2 bookkeeping.  cur has one free slot (its successor) and the
    // anchor one (the closing edge), except at the root where vertex 0 still
    // has both.  An unvisited vertex with exactly 2 usable connections must
    // use both, which can force the next move or kill the branch.
    const std::uint64_t allowed = unvisited | (1ULL << cur) | 1ULL;
    const bool at_root = cur == 0;
    int forced = -1, forced2 = -1, forced_cnt = 0, last_cnt = 0;
    for (std::uint64_t b = unvisited; b; b &= b - 1) {
      const int u = std::countr_zero(b);
      const std::uint64_t av = g.neighbors(u) & allowed;
      const int da = std::popcount(av);
      if (da < 2) return false;
      if (da != 2) continue;
      const bool uses_cur = (av >> cur) & 1;
      const bool uses_anchor = av & 1;
      if (at_root) {
        if (uses_anchor) {
          ++forced_cnt;
          (forced_cnt == 1 ? forced : forced2) = u;
        }
      } else {
        if (uses_cur && uses_anchor && std::popcount(unvisited) > 1)
          return false;  // u would be both successor and final vertex
        if (uses_cur) {
          ++forced_cnt;
          forced = u;
        } else if (uses_anchor && ++last_cnt > 1) {
          return false;  // two vertices claim the single closing edge
        }
      }
    }
    if (forced_cnt > (at_root ? 2 : 1)) return false;
    {
      const std::uint64_t region = unvisited | (1ULL << cur);
      std::uint64_t comp = 1ULL << cur, frontier = comp;
      while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b; b &= b - 1)
          next |= g.neighbors(std::countr_zero(b));
        next &= region & ~comp;
        comp |= next;
        frontier = next;
      }
      if (comp != region) return false;
    }
    std::uint64_t cands = g.neighbors(cur) & unvisited;
    if (!at_root && forced_cnt == 1) cands = 1ULL << forced;
    if (at_root && forced_cnt == 2) cands = (1ULL << forced) | (1ULL << forced2);
    for (std::uint64_t b = cands; b; b &= b - 1) {
      const int w = std::countr_zero(b);
      path.push_back(w);
      visited |= 1ULL << w;
      if (self(self, w)) return true;
      path.pop_back();
      visited &= ~(1ULL << w);
    }
    return false;
  };
  dfs(dfs, 0);

  res.nodes = nodes;
  if (found) {
    res.status = HamStatus::found;
    res.cycle.emplace(g, *found);
  } else {
    res.status = aborted ? HamStatus::unknown : HamStatus::refuted;
  }
  return res;
}

// Held-Karp existence check anchored at vertex 0: dp[mask] holds the
// endpoints reachable by a path over exactly mask.  n <= 18.
inline bool hamiltonicity_oracle(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 18) throw std::invalid_argument("hamiltonicity_oracle: n > 18");
  if (n < 3) return false;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
  dp[1] = 1;
  for (std::uint32_t mask = 1; mask < full; mask += 2) {  // odd masks contain vertex 0
    const std::uint32_t ends = dp[mask];
    if (!ends) continue;
    for (std::uint32_t eb = ends; eb; eb &= eb - 1) {
      const int e = std::countr_zero(eb);
      for (std::uint32_t wb = static_cast<std::uint32_t>(g.neighbors(e)) & full & ~mask;
           wb; wb &= wb - 1) {
        const int w = std::countr_zero(wb);
        dp[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return (dp[full] & static_cast<std::uint32_t>(g.neighbors(0)) & ~1u) != 0;
}

inline HamResult is_prism_hamiltonian(const Graph& g,
                                      std::uint64_t budget = 100'000'000) {
  return find_hamiltonian_cycle(prism(g), budget);
}

// ---------------------------------------------------------------------------
// Theorem pipeline

struct VerifyOptions {
  std::uint64_t ham_budget = 100'000'000;
  std::size_t cycle_limit = 1'000'000;
  int hole_cap = 16;
};

struct TheoremReport {
  std::string graph6;
  ToughnessCertificate tough;
  std::optional<bool> chordal5;  // nullopt when the hole search hit its cap
  std::optional<Cycle> hole;
  EdcResult edc;
  std::optional<ParityTriangleResult> triangle;  // run when the EDC is odd
  HamResult prism_result;
  bool hypothesis_met = false;
  bool conclusion_met = false;
  bool inconclusive = false;
};

// Hypothesis checks in theorem order, then the conclusion regardless of
// whether they passed; the sweep reuses the failing rows as exploration data.
inline TheoremReport verify_theorem(const Graph& g, const VerifyOptions& opt = {}) {
  TheoremReport r;
  r.graph6 = write_graph6(g);
  r.tough = toughness(g);
  try {
    r.hole = find_hole(g, 5, opt.hole_cap);
    r.chordal5 = !r.hole.has_value();
  } catch (const ResourceError&) {
    r.inconclusive = true;
  }
  r.edc = find_edge_dominating_cycle(g, EdcOrder::longest_first, opt.cycle_limit);
  if (r.edc.status == EdcStatus::unknown) r.inconclusive = true;
  if (r.edc.status == EdcStatus::found && r.edc.cycle->odd())
    r.triangle = find_parity_triangle(g, *r.edc.cycle);
  r.prism_result = is_prism_hamiltonian(g, opt.ham_budget);
  if (r.prism_result.status == HamStatus::unknown) r.inconclusive = true;
  r.hypothesis_met = r.tough.value > Rational(1) && r.chordal5 == true &&
                     r.edc.status == EdcStatus::found;
  r.conclusion_met = r.prism_result.status == HamStatus::found;
  return r;
}

struct CorollaryReport {
  int which = 1;
  ConditionReport condition;                         // corollary 2: the 4-edge reading
  std::optional<ConditionReport> condition_literal;  // corollary 2: the 3-edge reading
  Rational toughness_value;
  bool tough_ok = false;
  std::optional<bool> chordal5;
  bool applicable = false;
  bool applicable_literal = false;
  std::optional<EdcResult> edc;           // evaluated when some reading applies
  std::optional<HamResult> prism_result;
  bool ok = true;  // false = a counterexample to the corollary
  bool inconclusive = false;
};

// The corollary text quantifies over remote edge families but its index bound
// covers one more edge than it names; both readings are carried and each
// applicable one must yield an EDC and a prism certificate.
inline CorollaryReport check_corollary(const Graph& g, int which,
                                       const VerifyOptions& opt = {}) {
  CorollaryReport r;
  r.which = which;
  switch (which) {
    case 1:
      r.condition = check_delta3(g);
      break;
    case 2:
      r.condition = check_veldman(g, 3);
      r.condition_literal = check_corollary2_literal(g);
      break;
    case 3:
      r.condition = check_yoshimoto(g);
      break;
    default:
      throw std::invalid_argument("check_corollary: which must be 1, 2, or 3");
  }
  const ToughnessCertificate tc = toughness(g);
  r.toughness_value = tc.value;
  r.tough_ok = tc.value > Rational(1);
  try {
    r.chordal5 = is_k_chordal(g, 5, opt.hole_cap);
  } catch (const ResourceError&) {
    r.inconclusive = true;
  }
  const bool hyp = r.tough_ok && r.chordal5 == true;
  r.applicable = hyp && r.condition.holds;
  r.applicable_literal = hyp && r.condition_literal && r.condition_literal->holds;
  if (r.applicable || r.applicable_literal) {
    r.edc = find_edge_dominating_cycle(g, EdcOrder::longest_first, opt.cycle_limit);
    r.prism_result = is_prism_hamiltonian(g, opt.ham_budget);
    if (r.edc->status == EdcStatus::unknown ||
        r.prism_result->status == HamStatus::unknown)
      r.inconclusive = true;
    else if (r.edc->status != EdcStatus::found ||
             r.prism_result->status != HamStatus::found)
      r.ok = false;
  }
  return r;
}

}  // namespace prismham
