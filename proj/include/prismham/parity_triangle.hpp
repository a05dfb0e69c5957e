#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prismham/graph.hpp"

namespace prismham {

// Triangle on an odd cycle in the form c_m, c_j, c_{j+1} with an odd position
// gap: (j - m) mod p = 2q - 1.  All indices are cycle positions, not vertex
// ids.
struct TriangleWitness {
  int apex = 0;      // position m
  int edge_pos = 0;  // position j; the pair is (c_j, c_{j+1 mod p})
  int q = 0;
};

enum class SplitBranch { c1, c2 };  // arc kept: t odd -> C1, t even -> relabeled C2

// One level of the chord-split recursion.  Positions in `chord_a`/`chord_b`
// refer to the labeling current at that level; `child_positions` maps the
// next level's positions back to positions on the original cycle.
struct SplitStep {
  int chord_a = 0, chord_b = 0;  // current-label positions, a < b, non-consecutive
  Edge chord_vertices;           // same chord as graph vertices
  int t = 0;                     // short-side vertex count after rotating a to 0
  SplitBranch branch = SplitBranch::c1;
  std::vector<int> child_positions;
};

struct SplitTrace {
  std::vector<SplitStep> steps;
};

enum class PtStatus {
  found,
  no_chord,     // recursion starved on a chordless sub-cycle and the fallback found nothing
  no_triangle,  // even exhaustive search found no witness
};

struct ParityTriangleResult {
  PtStatus status = PtStatus::no_triangle;
  std::optional<TriangleWitness> witness;
  SplitTrace trace;
  bool used_fallback = false;
  // vertices of the chordless sub-cycle that starved the recursion (length >= 5)
  std::optional<std::vector<int>> chordless_subcycle;
};

inline bool verify_parity_triangle(const Graph& g, const Cycle& c, const TriangleWitness& w) {
  const int p = c.length();
  if (w.apex < 0 || w.apex >= p || w.edge_pos < 0 || w.edge_pos >= p) return false;
  const int gap = ((w.edge_pos - w.apex) % p + p) % p;
  if (gap % 2 == 0) return false;
  if (w.q < 1 || 2 * w.q - 1 != gap) return false;  // forces q <= (p-1)/2
  const int a = c.vertex(w.apex);
  const int u = c.vertex(w.edge_pos);
  const int v = c.vertex((w.edge_pos + 1) % p);
  return g.has_edge(a, u) && g.has_edge(a, v) && g.has_edge(u, v);
}

// Canonically least (m, j) pair passing verification, or nullopt.
inline std::optional<TriangleWitness> brute_force_parity_triangle(const Graph& g,
                                                                  const Cycle& c) {
  const int p = c.length();
  if (p % 2 == 0)
    throw std::invalid_argument("brute_force_parity_triangle: even cycle");
  for (int m = 0; m < p; ++m)
    for (int j = 0; j < p; ++j) {
      const int gap = ((j - m) % p + p) % p;
      if (gap % 2 == 0) continue;
      const TriangleWitness w{m, j, (gap + 1) / 2};
      if (verify_parity_triangle(g, c, w)) return w;
    }
  return std::nullopt;
}

namespace detail {

// least non-consecutive position pair of the current sub-cycle whose mapped
// vertices are adjacent in g
inline std::optional<std::pair<int, int>> least_chord(const Graph& g, const Cycle& c,
                                                      const std::vector<int>& seq) {
  const int len = static_cast<int>(seq.size());
  for (int a = 0; a < len; ++a)
    for (int b = a + 2; b < len; ++b) {
      if (a == 0 && b == len - 1) continue;  // wrap pair is consecutive
      if (g.has_edge(c.vertex(seq[static_cast<std::size_t>(a)]),
                     c.vertex(seq[static_cast<std::size_t>(b)])))
        return std::make_pair(a, b);
    }
  return std::nullopt;
}

}  // namespace detail

// Chord-split recursion from the lemma's proof.  The cycle is carried as a
// sequence of positions into the original cycle, so label-map composition is
// implicit.  Base case: length 3 gives apex = position 0, edge = (1, 2).
// Recursive case: take the least chord (a, b), rotate a to the front, set
// t = b - a + 1; t odd keeps the short arc C1, t even keeps the relabeled
// complementary arc C2.  The composed candidate is re-verified against the
// original cycle and the exhaustive scan takes over if it fails.
inline ParityTriangleResult find_parity_triangle(const Graph& g, const Cycle& c) {
  const int p = c.length();
  if (p % 2 == 0) throw std::invalid_argument("find_parity_triangle: even cycle");

  ParityTriangleResult res;
  std::vector<int> seq(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) seq[static_cast<std::size_t>(i)] = i;

  bool starved = false;
  while (seq.size() > 3) {
    const auto chord = detail::least_chord(g, c, seq);
    if (!chord) {
      starved = true;
      std::vector<int> evidence;
      for (int pos : seq) evidence.push_back(c.vertex(pos));
      res.chordless_subcycle = std::move(evidence);
      break;
    }
    const auto [a, b] = *chord;
    SplitStep step;
    step.chord_a = a;
    step.chord_b = b;
    step.chord_vertices = {c.vertex(seq[static_cast<std::size_t>(a)]),
                           c.vertex(seq[static_cast<std::size_t>(b)])};
    std::rotate(seq.begin(), seq.begin() + a, seq.end());
    const int s = b - a;
    step.t = s + 1;
    std::vector<int> child;
    if (step.t % 2 == 1) {
      step.branch = SplitBranch::c1;
      child.assign(seq.begin(), seq.begin() + s + 1);
    } else {
      step.branch = SplitBranch::c2;
      child.push_back(seq[0]);
      child.insert(child.end(), seq.begin() + s, seq.end());
    }
    step.child_positions = child;
    res.trace.steps.push_back(std::move(step));
    seq = std::move(child);
  }

  if (!starved) {
    // base triangle: positions (seq[0], seq[1], seq[2]) on the original cycle;
    // usable only if the (seq[1], seq[2]) pair is consecutive on c
    const int m = seq[0];
    int j = -1;
    if (((seq[2] - seq[1]) % p + p) % p == 1) j = seq[1];
    else if (((seq[1] - seq[2]) % p + p) % p == 1) j = seq[2];
    if (j >= 0) {
      const int gap = ((j - m) % p + p) % p;
      if (gap % 2 == 1) {
        const TriangleWitness w{m, j, (gap + 1) / 2};
        if (verify_parity_triangle(g, c, w)) {
          res.status = PtStatus::found;
          res.witness = w;
          return res;
        }
      }
    }
  }

  // composed candidate unusable (chord became the base edge) or recursion
  // starved: exhaustive scan is still authoritative
  if (auto w = brute_force_parity_triangle(g, c)) {
    res.status = PtStatus::found;
    res.witness = *w;
    res.used_fallback = true;
    return res;
  }
  res.status = starved ? PtStatus::no_chord : PtStatus::no_triangle;
  return res;
}

inline std::string witness_str(const Cycle& c, const TriangleWitness& w) {
  const int p = c.length();
  const int u = c.vertex(w.edge_pos), v = c.vertex((w.edge_pos + 1) % p);
  return "apex=" + std::to_string(c.vertex(w.apex)) + " edge=(" + std::to_string(u) +
         "," + std::to_string(v) + ") q=" + std::to_string(w.q) + " positions=(" +
         std::to_string(w.apex) + "," + std::to_string(w.edge_pos) + "," +
         std::to_string((w.edge_pos + 1) % p) + ")";
}

inline std::vector<std::string> trace_lines(const Cycle& c, const SplitTrace& tr) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < tr.steps.size(); ++i) {
    const SplitStep& s = tr.steps[i];
    std::string line = "step " + std::to_string(i + 1) + ": chord (" +
                       std::to_string(s.chord_vertices.first) + "," +
                       std::to_string(s.chord_vertices.second) + ") at positions (" +
                       std::to_string(s.chord_a) + "," + std::to_string(s.chord_b) +
                       ") t=" + std::to_string(s.t) +
                       (s.branch == SplitBranch::c1 ? " -> C1 [" : " -> C2 [");
    for (std::size_t k = 0; k < s.child_positions.size(); ++k) {
      if (k) line += ' ';
      line += std::to_string(c.vertex(s.child_positions[k]));
    }
    line += ']';
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace prismham
