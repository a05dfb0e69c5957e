#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "prismham/corpus.hpp"
#include "prismham/cycles.hpp"
#include "prismham/generators.hpp"
#include "prismham/invariants.hpp"
#include "prismham/parity_triangle.hpp"

using namespace prismham;

namespace {

// Re-derive each recorded step from scratch and check it was forced: the
// chord is the least one, the branch matches the parity rule, and the child
// sequence is exactly what the rule produces.
void replay_trace(const Graph& g, const Cycle& c, const ParityTriangleResult& r) {
  const int p = c.length();
  std::vector<int> seq(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) seq[static_cast<std::size_t>(i)] = i;

  for (const SplitStep& step : r.trace.steps) {
    const int len = static_cast<int>(seq.size());
    const int a = step.chord_a, b = step.chord_b;
    REQUIRE(a >= 0);
    REQUIRE(b < len);
    REQUIRE(b >= a + 2);
    REQUIRE(!(a == 0 && b == len - 1));
    // minimality: no lexicographically earlier pair is a chord
    for (int x = 0; x <= a; ++x)
      for (int y = x + 2; y < (x == a ? b : len); ++y) {
        if (x == 0 && y == len - 1) continue;
        REQUIRE(!g.has_edge(c.vertex(seq[x]), c.vertex(seq[y])));
      }
    REQUIRE(g.has_edge(c.vertex(seq[a]), c.vertex(seq[b])));
    REQUIRE(Edge{std::min(c.vertex(seq[a]), c.vertex(seq[b])),
                 std::max(c.vertex(seq[a]), c.vertex(seq[b]))} ==
            Edge{std::min(step.chord_vertices.first, step.chord_vertices.second),
                 std::max(step.chord_vertices.first, step.chord_vertices.second)});

    std::rotate(seq.begin(), seq.begin() + a, seq.end());
    const int s = b - a;
    REQUIRE(step.t == s + 1);
    std::vector<int> child;
    if (step.t % 2 == 1) {
      REQUIRE(step.branch == SplitBranch::c1);
      child.assign(seq.begin(), seq.begin() + s + 1);
    } else {
      REQUIRE(step.branch == SplitBranch::c2);
      child.push_back(seq[0]);
      child.insert(child.end(), seq.begin() + s, seq.end());
    }
    REQUIRE(child == step.child_positions);
    REQUIRE(child.size() % 2 == 1);  // every sub-cycle in the recursion is odd
    seq = std::move(child);
  }

  if (r.status == PtStatus::found && !r.used_fallback) {
    REQUIRE(seq.size() == 3);
    REQUIRE(r.witness->apex == seq[0]);
    REQUIRE((r.witness->edge_pos == seq[1] || r.witness->edge_pos == seq[2]));
  }
  if (r.chordless_subcycle) {
    // the remaining sequence really is chordless and is what was reported
    std::vector<int> mapped;
    for (int pos : seq) mapped.push_back(c.vertex(pos));
    REQUIRE(mapped == *r.chordless_subcycle);
    REQUIRE(seq.size() >= 5);
    const int len = static_cast<int>(seq.size());
    for (int x = 0; x < len; ++x)
      for (int y = x + 2; y < len; ++y) {
        if (x == 0 && y == len - 1) continue;
        REQUIRE(!g.has_edge(c.vertex(seq[x]), c.vertex(seq[y])));
      }
  }
}

}  // namespace

TEST_CASE("witness verification") {
  Graph g = gen_cycle_plus_chords(7, {{0, 3}, {0, 5}});
  Cycle c(g, {0, 1, 2, 3, 4, 5, 6});

  REQUIRE(verify_parity_triangle(g, c, {0, 5, 3}));
  REQUIRE(!verify_parity_triangle(g, c, {0, 2, 1}));   // even gap
  REQUIRE(!verify_parity_triangle(g, c, {0, 3, 2}));   // (0,4) missing
  REQUIRE(!verify_parity_triangle(g, c, {0, 5, 2}));   // wrong q
  REQUIRE(!verify_parity_triangle(g, c, {0, 1, 1}));   // (0,2) missing
  REQUIRE(!verify_parity_triangle(g, c, {7, 5, 3}));   // out of range
  REQUIRE(!verify_parity_triangle(g, c, {-1, 5, 3}));
  REQUIRE(!verify_parity_triangle(g, c, {0, 5, 0}));

  Graph k3 = named_graph("K_3");
  Cycle t(k3, {0, 1, 2});
  REQUIRE(verify_parity_triangle(k3, t, {0, 1, 1}));
  REQUIRE(verify_parity_triangle(k3, t, {1, 2, 1}));
  REQUIRE(!verify_parity_triangle(k3, t, {0, 2, 1}));  // gap 2, even
}

TEST_CASE("brute force scan") {
  Graph k3 = named_graph("K_3");
  auto w = brute_force_parity_triangle(k3, Cycle(k3, {0, 1, 2}));
  REQUIRE(w.has_value());
  REQUIRE(w->apex == 0);
  REQUIRE(w->edge_pos == 1);
  REQUIRE(w->q == 1);

  Graph c5 = named_graph("C_5");
  REQUIRE(!brute_force_parity_triangle(c5, Cycle(c5, {0, 1, 2, 3, 4})).has_value());

  Graph g = gen_cycle_plus_chords(7, {{0, 3}, {0, 5}});
  auto w7 = brute_force_parity_triangle(g, Cycle(g, {0, 1, 2, 3, 4, 5, 6}));
  REQUIRE(w7.has_value());
  REQUIRE(w7->apex == 0);
  REQUIRE(w7->edge_pos == 5);
  REQUIRE(w7->q == 3);

  Graph c4 = named_graph("C_4");
  REQUIRE_THROWS_AS(brute_force_parity_triangle(c4, Cycle(c4, {0, 1, 2, 3})),
                    std::invalid_argument);
}

TEST_CASE("chord split recursion on the worked example") {
  Graph g = gen_cycle_plus_chords(7, {{0, 3}, {0, 5}});
  Cycle c(g, {0, 1, 2, 3, 4, 5, 6});
  auto r = find_parity_triangle(g, c);

  REQUIRE(r.status == PtStatus::found);
  REQUIRE(!r.used_fallback);
  REQUIRE(r.witness->apex == 0);
  REQUIRE(r.witness->edge_pos == 5);
  REQUIRE(r.witness->q == 3);
  REQUIRE(witness_str(c, *r.witness) == "apex=0 edge=(5,6) q=3 positions=(0,5,6)");

  REQUIRE(r.trace.steps.size() == 2);
  REQUIRE(r.trace.steps[0].chord_vertices == Edge{0, 3});
  REQUIRE(r.trace.steps[0].t == 4);
  REQUIRE(r.trace.steps[0].branch == SplitBranch::c2);
  REQUIRE(r.trace.steps[0].child_positions == std::vector<int>{0, 3, 4, 5, 6});
  REQUIRE(r.trace.steps[1].chord_vertices == Edge{0, 5});
  REQUIRE(r.trace.steps[1].t == 4);
  REQUIRE(r.trace.steps[1].child_positions == std::vector<int>{0, 5, 6});
  replay_trace(g, c, r);

  auto lines = trace_lines(c, r.trace);
  REQUIRE(lines.size() == 2);
  REQUIRE(lines[0] == "step 1: chord (0,3) at positions (0,3) t=4 -> C2 [0 3 4 5 6]");
  REQUIRE(lines[1] == "step 2: chord (0,5) at positions (0,3) t=4 -> C2 [0 5 6]");
}

TEST_CASE("odd branch and base cases") {
  // one chord at distance 2: t = 3, odd branch, immediate triangle
  Graph g = gen_cycle_plus_chords(5, {{0, 2}});
  Cycle c(g, {0, 1, 2, 3, 4});
  auto r = find_parity_triangle(g, c);
  REQUIRE(r.status == PtStatus::found);
  REQUIRE(!r.used_fallback);
  REQUIRE(r.witness->apex == 0);
  REQUIRE(r.witness->edge_pos == 1);
  REQUIRE(r.witness->q == 1);
  REQUIRE(r.trace.steps.size() == 1);
  REQUIRE(r.trace.steps[0].branch == SplitBranch::c1);
  REQUIRE(r.trace.steps[0].t == 3);
  replay_trace(g, c, r);

  Graph k3 = named_graph("K_3");
  auto rt = find_parity_triangle(k3, Cycle(k3, {0, 1, 2}));
  REQUIRE(rt.status == PtStatus::found);
  REQUIRE(rt.trace.steps.empty());
  REQUIRE(!rt.used_fallback);

  Graph c4 = named_graph("C_4");
  REQUIRE_THROWS_AS(find_parity_triangle(c4, Cycle(c4, {0, 1, 2, 3})),
                    std::invalid_argument);
}

TEST_CASE("starvation reports the chordless sub-cycle") {
  Graph c5 = named_graph("C_5");
  Cycle c(c5, {0, 1, 2, 3, 4});
  auto r = find_parity_triangle(c5, c);
  REQUIRE(r.status == PtStatus::no_chord);
  REQUIRE(!r.witness.has_value());
  REQUIRE(!r.used_fallback);
  REQUIRE(r.chordless_subcycle == std::vector<int>{0, 1, 2, 3, 4});
  replay_trace(c5, c, r);

  // a chordless cycle of length >= 5 admits no parity triangle at all (both
  // apex sides would be chords), so starvation is never rescued
  REQUIRE(!brute_force_parity_triangle(c5, c).has_value());
}

TEST_CASE("composed candidate can need the exhaustive rescue") {
  // 5-chordal host where the recursion's base triangle lands on a chord pair
  // rather than an original cycle edge; the scan still finds a witness
  Graph g = parse_graph6("F@Uf_");
  REQUIRE(is_k_chordal(g, 5));
  Cycle c(g, {0, 5, 2, 3, 4, 1, 6});
  auto r = find_parity_triangle(g, c);
  REQUIRE(r.status == PtStatus::found);
  REQUIRE(r.used_fallback);
  REQUIRE(r.witness->apex == 6);
  REQUIRE(r.witness->edge_pos == 2);
  REQUIRE(r.witness->q == 2);
  REQUIRE(verify_parity_triangle(g, c, *r.witness));
  REQUIRE(witness_str(c, *r.witness) == "apex=6 edge=(2,3) q=2 positions=(6,2,3)");
}

TEST_CASE("recursion agrees with the exhaustive scan corpus-wide") {
  long long cycles_checked = 0, fallbacks = 0;
  for (const Graph& g : builtin_corpus(6, 3)) {
    const bool chordal5 = is_k_chordal(g, 5);
    CycleQuery q;
    q.parity = Parity::odd;
    auto odd = enumerate_cycles(g, q);
    REQUIRE(odd.complete);
    for (const auto& c : odd.cycles) {
      ++cycles_checked;
      auto fast = find_parity_triangle(g, c);
      auto slow = brute_force_parity_triangle(g, c);
      INFO(write_graph6(g) << " cycle " << c.str());
      REQUIRE((fast.status == PtStatus::found) == slow.has_value());
      if (fast.status == PtStatus::found) {
        REQUIRE(verify_parity_triangle(g, c, *fast.witness));
        if (fast.used_fallback) ++fallbacks;
      }
      if (chordal5) REQUIRE(fast.status == PtStatus::found);
      replay_trace(g, c, fast);
    }
  }
  REQUIRE(cycles_checked > 1000);
  // how often the composed candidate needed rescue is an open question the
  // sweep answers empirically; nothing to pin here beyond visibility
  SUCCEED("fallback activations at n <= 6: " << fallbacks);
}
