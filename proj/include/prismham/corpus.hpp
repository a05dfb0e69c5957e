#pragma once

#include <istream>
#include <set>
#include <string>
#include <vector>

#include "prismham/graph.hpp"

namespace prismham {

// Canonical form for isomorph rejection: the minimum, over all vertex
// permutations, of the upper-triangle adjacency bits read in graph6 order and
// packed MSB-first into one word.  Computed by DFS over partial placements
// with prefix pruning; the result equals the full n! minimization.  Needs
// n(n-1)/2 <= 64, i.e. n <= 11.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 11) throw std::invalid_argument("canonical_code: n > 11");
  const int nbits = n * (n - 1) / 2;
  if (nbits == 0) return 0;
  std::uint64_t best = ~0ULL >> (64 - nbits);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::uint64_t used = 0;

  auto dfs = [&](auto&& self, int k, std::uint64_t partial, int bits) -> void {
    if (k == n) {
      if (partial < best) best = partial;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      std::uint64_t block = 0;
      for (int i = 0; i < k; ++i)
        block = (block << 1) | (g.has_edge(perm[static_cast<std::size_t>(i)], v) ? 1 : 0);
      const std::uint64_t cand = (partial << k) | block;
      const int nb = bits + k;
      if (cand > (best >> (nbits - nb))) continue;  // prefix already loses
      perm[static_cast<std::size_t>(k)] = v;
      used |= 1ULL << v;
      self(self, k + 1, cand, nb);
      used &= ~(1ULL << v);
    }
  };
  dfs(dfs, 0, 0, 0);
  return best;
}

// inverse of canonical_code's packing for a given n
inline Graph graph_from_code(std::uint64_t code, int n) {
  const int nbits = n * (n - 1) / 2;
  std::vector<Edge> e;
  int idx = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++idx)
      if ((code >> (nbits - 1 - idx)) & 1) e.emplace_back(row, col);
  return Graph(n, std::move(e));
}

// All connected graphs with min_n <= n <= max_n, one per isomorphism class,
// ordered by n then by canonical code.  Level n is produced by attaching a
// new top vertex to every nonempty subset of every level-(n-1) representative;
// every class has a non-cut vertex, so nothing is missed.
inline std::vector<Graph> builtin_corpus(int max_n, int min_n = 1) {
  if (max_n < 1 || max_n > 8)
    throw std::invalid_argument(
        "builtin_corpus: supported range is 1..8; use a graph6 corpus file beyond that");
  if (min_n < 1 || min_n > max_n) throw std::invalid_argument("builtin_corpus: bad min_n");
  std::vector<Graph> out;
  std::vector<Graph> level{Graph(1, {})};
  if (min_n <= 1) out.push_back(level[0]);
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::uint64_t> seen;
    for (const Graph& parent : level) {
      std::vector<Edge> base = parent.edges();
      for (std::uint64_t mask = 1; mask < (1ULL << (n - 1)); ++mask) {
        std::vector<Edge> e = base;
        for (std::uint64_t b = mask; b; b &= b - 1)
          e.emplace_back(std::countr_zero(b), n - 1);
        seen.insert(canonical_code(Graph(n, std::move(e))));
      }
    }
    level.clear();
    for (std::uint64_t code : seen) level.push_back(graph_from_code(code, n));
    if (n >= min_n) out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// One graph per nonempty line.  A ">>graph6<<" banner prefix on a line is
// stripped.  strict=false skips malformed lines, recording a note per skip.
inline std::vector<Graph> read_graph6_stream(std::istream& in, bool strict = true,
                                             std::vector<std::string>* warnings = nullptr) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& pe) {
      const std::string msg = "line " + std::to_string(lineno) + ": " + pe.what();
      if (strict) throw ParseError(msg, pe.offset);
      if (warnings) warnings->push_back(msg);
    }
  }
  return out;
}

}  // namespace prismham
