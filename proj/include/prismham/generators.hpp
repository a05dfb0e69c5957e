#pragma once

#include <random>
#include <string>
#include <vector>

#include "prismham/graph.hpp"
#include "prismham/invariants.hpp"

namespace prismham {

// Fixture labelings (documented, stable):
//   C_n    cycle 0-1-...-(n-1)-0
//   P_n    path 0-1-...-(n-1)
//   K_n    complete
//   K_a,b / K_a,b,c   complete multipartite, parts laid out consecutively
//   wheel_n  hub 0 plus rim cycle 1..n-1 (n total vertices, n >= 4)
//   star_n   center 0 plus n-1 leaves (= K_{1,n-1})
//   petersen outer C5 on 0..4, inner 5..9, spokes i-(i+5), inner edges
//            (i+5)-((i+2)%5+5)
inline Graph named_graph(const std::string& name) {
  auto bad = [&]() -> Graph {
    throw std::invalid_argument("named_graph: unrecognized name " + name);
  };
  if (name == "petersen") {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(i, i + 5);
      e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, std::move(e));
  }
  const auto us = name.find('_');
  if (us == std::string::npos || us + 1 == name.size()) return bad();
  const std::string head = name.substr(0, us);
  std::vector<int> parts;
  {
    std::string tail = name.substr(us + 1);
    std::size_t pos = 0;
    while (pos <= tail.size()) {
      const auto comma = tail.find(',', pos);
      const std::string tok = tail.substr(pos, comma == std::string::npos
                                                  ? std::string::npos
                                                  : comma - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        return bad();
      parts.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  std::vector<Edge> e;
  if (head == "C" && parts.size() == 1 && parts[0] >= 3) {
    const int n = parts[0];
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
  }
  if (head == "P" && parts.size() == 1 && parts[0] >= 1) {
    const int n = parts[0];
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
  }
  if (head == "K" && !parts.empty() && parts.size() <= 3) {
    for (int p : parts)
      if (p < 1) return bad();
    if (parts.size() == 1) {
      const int n = parts[0];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
      return Graph(n, std::move(e));
    }
    // complete multipartite: edges between different parts only
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
      for (int i = 0; i < parts[p]; ++i, ++n) part_of.push_back(static_cast<int>(p));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)])
          e.emplace_back(i, j);
    return Graph(n, std::move(e));
  }
  if (head == "wheel" && parts.size() == 1 && parts[0] >= 4) {
    const int n = parts[0];
    for (int i = 1; i < n; ++i) {
      e.emplace_back(0, i);
      e.emplace_back(i, i == n - 1 ? 1 : i + 1);
    }
    return Graph(n, std::move(e));
  }
  if (head == "star" && parts.size() == 1 && parts[0] >= 1) {
    const int n = parts[0];
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, std::move(e));
  }
  return bad();
}

namespace detail {

// mt19937_64's output sequence is pinned by the standard, so plain modular
// reduction keeps generator output identical across platforms
inline std::size_t rng_below(std::mt19937_64& rng, std::size_t k) {
  return static_cast<std::size_t>(rng() % k);
}

}  // namespace detail

// Random chordal graph via a random perfect elimination ordering read
// backwards: each new vertex's neighborhood is a clique among the existing
// vertices (grown greedily from a random seed vertex), so the construction is
// chordal and connected by default.  edge_budget is a soft target.
inline Graph gen_random_chordal(int n, int edge_budget, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("gen_random_chordal: bad n");
  std::mt19937_64 rng(seed);
  Graph g(1, {});
  std::vector<Edge> edges;
  int have = 0;
  for (int v = 1; v < n; ++v) {
    // cap the clique so every future vertex can still afford one edge
    const int reserve = n - 1 - v;
    int cap = edge_budget - have - reserve;
    if (cap < 1) cap = 1;
    if (cap > v) cap = v;
    const int want = 1 + static_cast<int>(detail::rng_below(
                             rng, static_cast<std::size_t>(cap)));
    std::vector<int> clique{
        static_cast<int>(detail::rng_below(rng, static_cast<std::size_t>(v)))};
    while (static_cast<int>(clique.size()) < want) {
      std::vector<int> cands;
      for (int w = 0; w < v; ++w) {
        bool ok = true;
        for (int c : clique)
          if (w == c || !g.has_edge(w, c)) {
            ok = false;
            break;
          }
        if (ok) cands.push_back(w);
      }
      if (cands.empty()) break;
      clique.push_back(cands[detail::rng_below(rng, cands.size())]);
    }
    for (int c : clique) edges.emplace_back(c, v);
    have += static_cast<int>(clique.size());
    g = Graph(v + 1, edges);
  }
  return g;
}

// C_n plus exactly the listed chords; a chord duplicating a cycle edge is an
// input error.
inline Graph gen_cycle_plus_chords(int n, const std::vector<Edge>& chords) {
  if (n < 3) throw std::invalid_argument("gen_cycle_plus_chords: n < 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  for (auto [u, v] : chords) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v)
      throw std::invalid_argument("gen_cycle_plus_chords: chord out of range");
    if (v - u == 1 || (u == 0 && v == n - 1))
      throw std::invalid_argument("gen_cycle_plus_chords: chord duplicates a cycle edge");
    e.emplace_back(u, v);
  }
  return Graph(n, std::move(e));
}

// Rejection sampling: Erdos-Renyi-style draws filtered to connected 5-chordal.
// density is a percentage.
inline Graph gen_random_filtered_5chordal(int n, int density_percent, std::uint64_t seed,
                                          int max_attempts = 20000) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("gen_random_filtered_5chordal: bad n");
  if (density_percent < 0 || density_percent > 100)
    throw std::invalid_argument("gen_random_filtered_5chordal: bad density");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (detail::rng_below(rng, 100) < static_cast<std::size_t>(density_percent))
          e.emplace_back(i, j);
    Graph g(n, std::move(e));
    if (is_connected(g) && is_k_chordal(g, 5, std::max(16, n))) return g;
  }
  throw std::runtime_error(
      "gen_random_filtered_5chordal: no admissible graph within attempt budget");
}

}  // namespace prismham
