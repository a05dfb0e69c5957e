#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prismham {

// Vertices are 0-indexed throughout; n is capped at 64 so every vertex set
// fits one machine word.
inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;  // always u < v

// Bitmask over [0, n).
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1));
  }
  static constexpr VertexSet single(int v) { return VertexSet(1ULL << v); }

  constexpr bool contains(int v) const { return (bits >> v) & 1; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr void add(int v) { bits |= 1ULL << v; }
  constexpr void remove(int v) { bits &= ~(1ULL << v); }
  constexpr int min_vertex() const { return std::countr_zero(bits); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits & ~o.bits); }
  constexpr bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }
};

// Immutable simple undirected graph: per-vertex adjacency bitrows plus a
// lexicographically sorted edge list describing the same edge set.
class Graph {
 public:
  Graph() = default;

  // Collapses duplicate edges; rejects self-loops and out-of-range indices.
  Graph(int n, std::vector<Edge> edges) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("Graph: vertex count out of range");
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n) throw std::invalid_argument("Graph: edge index out of range");
      if (u == v) throw std::invalid_argument("Graph: self-loop");
      adj_[static_cast<std::size_t>(u)] |= 1ULL << v;
      adj_[static_cast<std::size_t>(v)] |= 1ULL << u;
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    return u >= 0 && u < n_ && v >= 0 && v < n_ && u != v &&
           ((adj_[static_cast<std::size_t>(u)] >> v) & 1);
  }
  // Neighborhood of v as a bitmask.
  std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Decomposition primitives

// Maximal connected subsets of `within`, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  std::uint64_t todo = within.bits;
  while (todo) {
    const int start = std::countr_zero(todo);
    std::uint64_t comp = 1ULL << start;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b; b &= b - 1)
        next |= g.neighbors(std::countr_zero(b));
      next &= within.bits & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(VertexSet(comp));
    todo &= ~comp;
  }
  return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

inline int component_count(const Graph& g, VertexSet within) {
  return static_cast<int>(connected_components(g, within).size());
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return component_count(g, g.vertices()) == 1;
}

// Subgraph induced on s, vertices relabeled 0..|s|-1 in increasing order.
// Second element maps new index -> original vertex.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s) {
  const std::vector<int> old_of_new = s.to_vector();
  std::vector<int> new_of_old(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < old_of_new.size(); ++i)
    new_of_old[static_cast<std::size_t>(old_of_new[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (s.contains(u) && s.contains(v))
      edges.emplace_back(new_of_old[static_cast<std::size_t>(u)],
                         new_of_old[static_cast<std::size_t>(v)]);
  return {Graph(static_cast<int>(old_of_new.size()), std::move(edges)), old_of_new};
}

// ---------------------------------------------------------------------------
// Cycles

// Cyclic vertex sequence, canonicalized up to rotation and reflection:
// the minimum vertex comes first and its smaller neighbor second.
class Cycle {
 public:
  // Validates against the host graph: p >= 3, distinct vertices, every
  // consecutive pair (including the wrap-around) an edge.
  Cycle(const Graph& g, std::vector<int> vertices) {
    const int p = static_cast<int>(vertices.size());
    if (p < 3) throw std::invalid_argument("Cycle: fewer than 3 vertices");
    VertexSet seen;
    for (int v : vertices) {
      if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("Cycle: vertex out of range");
      if (seen.contains(v)) throw std::invalid_argument("Cycle: repeated vertex");
      seen.add(v);
    }
    for (int i = 0; i < p; ++i)
      if (!g.has_edge(vertices[static_cast<std::size_t>(i)],
                      vertices[static_cast<std::size_t>((i + 1) % p)]))
        throw std::invalid_argument("Cycle: consecutive pair is not an edge");
    verts_ = canonicalize(std::move(vertices));
  }

  int length() const { return static_cast<int>(verts_.size()); }
  bool odd() const { return length() % 2 == 1; }
  const std::vector<int>& vertices() const { return verts_; }
  int vertex(int pos) const { return verts_[static_cast<std::size_t>(pos)]; }

  VertexSet vertex_set() const {
    VertexSet s;
    for (int v : verts_) s.add(v);
    return s;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(verts_[i]);
    }
    return out;
  }

  bool operator==(const Cycle& o) const { return verts_ == o.verts_; }
  bool operator<(const Cycle& o) const {
    if (verts_.size() != o.verts_.size()) return verts_.size() < o.verts_.size();
    return verts_ < o.verts_;
  }

 private:
  static std::vector<int> canonicalize(std::vector<int> v) {
    const int p = static_cast<int>(v.size());
    const auto min_it = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), min_it, v.end());
    if (v[1] > v[static_cast<std::size_t>(p - 1)])
      std::reverse(v.begin() + 1, v.end());
    return v;
  }

  std::vector<int> verts_;
};

// ---------------------------------------------------------------------------
// graph6: 6-bit chunks of the upper adjacency triangle in column-major order
// (pairs (0,1),(0,2),(1,2),(0,3),...), each chunk offset by 63.  Short form
// only, n <= 62.

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

inline Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: non-printable character", i);
  }
  if (text[0] == '~') throw ParseError("graph6: extended size header not supported", 0);
  const int n = text[0] - 63;
  const int nbits = n * (n - 1) / 2;
  const std::size_t need = 1 + static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() < need)
    throw ParseError("graph6: truncated, expected " + std::to_string(need) +
                         " bytes for n=" + std::to_string(n),
                     text.size());
  if (text.size() > need) throw ParseError("graph6: trailing garbage", need);
  std::vector<Edge> edges;
  int bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      const int chunk = text[static_cast<std::size_t>(1 + bit / 6)] - 63;
      if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
    }
  }
  // padding bits past the triangle must be zero for a canonical encoding
  for (int b = nbits; b < 6 * ((nbits + 5) / 6); ++b) {
    const int chunk = text[static_cast<std::size_t>(1 + b / 6)] - 63;
    if ((chunk >> (5 - b % 6)) & 1)
      throw ParseError("graph6: nonzero padding bit", static_cast<std::size_t>(1 + b / 6));
  }
  return Graph(n, std::move(edges));
}

inline std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("graph6: n > 62 not supported");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  const int nbits = n * (n - 1) / 2;
  int chunk = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      chunk = (chunk << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  }
  if (nbits % 6) out.push_back(static_cast<char>((chunk << (6 - nbits % 6)) + 63));
  return out;
}

// ---------------------------------------------------------------------------
// DIMACS edge format: "p edge n m" header, then m lines "e u v", 1-indexed.
// Comment lines ("c ...") and blank lines are skipped; duplicates collapse.

inline Graph parse_dimacs(std::istream& in) {
  int n = -1;
  long declared_m = -1;
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> n >> declared_m) || fmt != "edge" || n < 0)
        throw ParseError("dimacs line " + std::to_string(lineno) + ": malformed problem line", lineno);
      continue;
    }
    if (tok == "e") {
      if (n < 0) throw ParseError("dimacs line " + std::to_string(lineno) + ": edge before header", lineno);
      int u, v;
      if (!(ls >> u >> v)) throw ParseError("dimacs line " + std::to_string(lineno) + ": malformed edge line", lineno);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError("dimacs line " + std::to_string(lineno) + ": vertex index out of range", lineno);
      if (u == v) throw ParseError("dimacs line " + std::to_string(lineno) + ": self-loop", lineno);
      edges.emplace_back(u - 1, v - 1);  // to 0-indexed
      continue;
    }
    throw ParseError("dimacs line " + std::to_string(lineno) + ": unrecognized line", lineno);
  }
  if (n < 0) throw ParseError("dimacs: missing header", lineno);
  return Graph(n, std::move(edges));
}

inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

// ---------------------------------------------------------------------------
// Human-readable dumps

// One "u: v w x" line per vertex.
inline std::string to_adjacency_text(const Graph& g) {
  std::string out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    out += std::to_string(u) + ":";
    for (std::uint64_t b = g.neighbors(u); b; b &= b - 1)
      out += " " + std::to_string(std::countr_zero(b));
    out += "\n";
  }
  return out;
}

// DOT export, edge statements only (isolated vertices get bare node lines).
inline std::string to_dot(const Graph& g, const std::string& name = "g") {
  std::string out = "graph " + name + " {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace prismham
