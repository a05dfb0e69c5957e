#pragma once

#include <optional>
#include <vector>

#include "prismham/graph.hpp"
#include "prismham/invariants.hpp"

namespace prismham {

enum class Parity { any, odd, even };
enum class CycleOrder { canonical, longest_first };

struct CycleQuery {
  int min_length = 3;
  int max_length = kMaxVertices;  // clamped to n
  Parity parity = Parity::any;
  std::size_t limit = 1'000'000;  // matching-cycle budget
  CycleOrder order = CycleOrder::canonical;
};

struct CycleList {
  std::vector<Cycle> cycles;
  // true when every matching cycle was emitted; false means the limit stopped
  // enumeration with at least one matching cycle unreported
  bool complete = true;
};

namespace detail {

inline bool longest_first_less(const Cycle& a, const Cycle& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a.vertices() < b.vertices();
}

}  // namespace detail

// Every distinct cycle (up to rotation/reflection) matching the query, each
// exactly once.  DFS anchored at the cycle's minimum vertex; the orientation
// with second vertex < last vertex is the one recorded.
inline CycleList enumerate_cycles(const Graph& g, CycleQuery q = {}) {
  if (q.min_length < 3 || q.min_length > q.max_length)
    throw std::invalid_argument("enumerate_cycles: bad length range");
  const int n = g.vertex_count();
  if (q.max_length > n) q.max_length = n;
  CycleList out;
  if (q.min_length > q.max_length) return out;

  std::vector<int> path;
  std::uint64_t path_mask = 0;

  auto matches = [&](int len) {
    if (len < q.min_length) return false;
    if (q.parity == Parity::odd && len % 2 == 0) return false;
    if (q.parity == Parity::even && len % 2 == 1) return false;
    return true;
  };

  auto dfs = [&](auto&& self, int anchor) -> bool {  // true = budget exhausted
    const int tail = path.back();
    const int len = static_cast<int>(path.size());
    if ((g.neighbors(tail) >> anchor) & 1) {
      if (len >= 3 && path[1] < tail && matches(len)) {
        if (out.cycles.size() == q.limit) {
          out.complete = false;
          return true;
        }
        out.cycles.emplace_back(g, path);
      }
    }
    if (len >= q.max_length) return false;
    for (std::uint64_t cand = g.neighbors(tail) & ~path_mask; cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      if (w <= anchor) continue;
      path.push_back(w);
      path_mask |= 1ULL << w;
      const bool stop = self(self, anchor);
      path.pop_back();
      path_mask &= ~(1ULL << w);
      if (stop) return true;
    }
    return false;
  };

  for (int a = 0; a < n && out.complete; ++a) {
    for (std::uint64_t nb = g.neighbors(a); nb && out.complete; nb &= nb - 1) {
      const int b = std::countr_zero(nb);
      if (b <= a) continue;
      path = {a, b};
      path_mask = (1ULL << a) | (1ULL << b);
      dfs(dfs, a);
    }
  }

  if (q.order == CycleOrder::canonical)
    std::sort(out.cycles.begin(), out.cycles.end());
  else
    std::sort(out.cycles.begin(), out.cycles.end(), detail::longest_first_less);
  return out;
}

// nullopt when V(g) - V(c) induces no edge, else the lex-least uncovered edge
inline std::optional<Edge> is_edge_dominating(const Graph& g, const Cycle& c) {
  const int p = c.length();
  for (int i = 0; i < p; ++i)
    if (!g.has_edge(c.vertex(i), c.vertex((i + 1) % p)))
      throw std::invalid_argument("is_edge_dominating: not a cycle of this graph");
  const VertexSet rest = g.vertices().minus(c.vertex_set());
  for (const auto& e : g.edges())  // sorted, so first hit is lex-least
    if (rest.contains(e.first) && rest.contains(e.second)) return e;
  return std::nullopt;
}

enum class EdcStatus { found, none, unknown };

struct EdcResult {
  EdcStatus status = EdcStatus::none;
  std::optional<Cycle> cycle;           // when found
  std::optional<Edge> uncovered_edge;   // diagnostic: why the best candidate failed
};

enum class EdcOrder { longest_first, shortest_first };

// First cycle in the preferred order that is edge-dominating.  `none` is only
// reported after every cycle was enumerated and tested; a budget stop with no
// hit is `unknown`.
inline EdcResult find_edge_dominating_cycle(const Graph& g,
                                            EdcOrder prefer = EdcOrder::longest_first,
                                            std::size_t limit = 1'000'000) {
  CycleQuery q;
  q.limit = limit;
  q.order = prefer == EdcOrder::longest_first ? CycleOrder::longest_first
                                              : CycleOrder::canonical;
  const CycleList all = enumerate_cycles(g, q);
  EdcResult r;
  for (const Cycle& c : all.cycles) {
    const auto bad = is_edge_dominating(g, c);
    if (!bad) {
      r.status = EdcStatus::found;
      r.cycle = c;
      return r;
    }
    if (!r.uncovered_edge) r.uncovered_edge = bad;  // best candidate's failure
  }
  r.status = all.complete ? EdcStatus::none : EdcStatus::unknown;
  return r;
}

// Maximum-length cycle, lex-least among those; nullopt for acyclic graphs.
inline std::optional<Cycle> longest_cycle(const Graph& g, std::size_t limit = 1'000'000) {
  CycleQuery q;
  q.limit = limit;
  q.order = CycleOrder::longest_first;
  const CycleList all = enumerate_cycles(g, q);
  if (!all.complete)
    throw ResourceError("longest_cycle: cycle budget exhausted");
  if (all.cycles.empty()) return std::nullopt;
  return all.cycles.front();
}

}  // namespace prismham
