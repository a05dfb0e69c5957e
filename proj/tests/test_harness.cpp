#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "prismham/corpus.hpp"
#include "prismham/generators.hpp"
#include "prismham/invariants.hpp"
#include "prismham/sweep.hpp"

using namespace prismham;

namespace {

// reference canonicalization: minimum over all n! relabelings
std::uint64_t brute_canonical(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t code = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        code = (code << 1) |
               (g.has_edge(perm[static_cast<std::size_t>(u)],
                           perm[static_cast<std::size_t>(v)])
                    ? 1u
                    : 0u);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("named graph families") {
  REQUIRE(named_graph("C_5") == Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
  REQUIRE(named_graph("P_1").vertex_count() == 1);
  REQUIRE(named_graph("P_4").edge_count() == 3);
  REQUIRE(named_graph("K_1").vertex_count() == 1);
  REQUIRE(named_graph("K_6").edge_count() == 15);

  Graph pet = named_graph("petersen");
  REQUIRE(pet.vertex_count() == 10);
  REQUIRE(pet.edge_count() == 15);
  for (int v = 0; v < 10; ++v) REQUIRE(pet.degree(v) == 3);
  REQUIRE(pet.has_edge(0, 5));
  REQUIRE(pet.has_edge(5, 7));

  Graph k33 = named_graph("K_3,3");
  REQUIRE(k33.edge_count() == 9);
  REQUIRE(!k33.has_edge(0, 1));
  REQUIRE(k33.has_edge(0, 3));

  Graph oct = named_graph("K_2,2,2");
  REQUIRE(oct.vertex_count() == 6);
  REQUIRE(oct.edge_count() == 12);
  REQUIRE(!oct.has_edge(0, 1));
  REQUIRE(!oct.has_edge(2, 3));
  REQUIRE(!oct.has_edge(4, 5));

  Graph w6 = named_graph("wheel_6");  // hub plus a 5-rim, 6 vertices total
  REQUIRE(w6.vertex_count() == 6);
  REQUIRE(w6.edge_count() == 10);
  REQUIRE(w6.degree(0) == 5);

  Graph s7 = named_graph("star_7");
  REQUIRE(s7.vertex_count() == 7);
  REQUIRE(s7.degree(0) == 6);

  for (const char* bad : {"C_2", "K_0", "P_0", "wheel_3", "Q_5", "", "C_x", "K_2,"})
    REQUIRE_THROWS_AS(named_graph(bad), std::invalid_argument);
}

TEST_CASE("chordal generator determinism and structure") {
  Graph a = gen_random_chordal(6, 9, 42);
  Graph b = gen_random_chordal(6, 9, 42);
  REQUIRE(a == b);
  REQUIRE(write_graph6(a) == "EtJ?");  // pinned cross-platform

  bool differs = false;
  for (std::uint64_t s = 43; s < 48 && !differs; ++s)
    differs = !(gen_random_chordal(6, 9, s) == a);
  REQUIRE(differs);

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    Graph g = gen_random_chordal(n, 2 * n, seed);
    INFO("seed " << seed << " n " << n);
    REQUIRE(g.vertex_count() == n);
    REQUIRE(is_connected(g));
    REQUIRE(g.edge_count() <= 2 * n);
    REQUIRE(is_k_chordal(g, 3));
  }
  REQUIRE(gen_random_chordal(1, 0, 5).vertex_count() == 1);
  REQUIRE_THROWS_AS(gen_random_chordal(0, 3, 1), std::invalid_argument);
}

TEST_CASE("cycle plus chords generator") {
  Graph g = gen_cycle_plus_chords(7, {{0, 3}, {0, 5}});
  REQUIRE(g.vertex_count() == 7);
  REQUIRE(g.edge_count() == 9);
  REQUIRE(g.has_edge(0, 3));
  REQUIRE(gen_cycle_plus_chords(5, {}) == named_graph("C_5"));
  REQUIRE_THROWS_AS(gen_cycle_plus_chords(2, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(gen_cycle_plus_chords(5, {{0, 1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(gen_cycle_plus_chords(5, {{0, 4}}), std::invalid_argument);
  REQUIRE_THROWS_AS(gen_cycle_plus_chords(5, {{0, 5}}), std::invalid_argument);
  REQUIRE_THROWS_AS(gen_cycle_plus_chords(5, {{2, 2}}), std::invalid_argument);
}

TEST_CASE("filtered 5-chordal generator") {
  Graph g = gen_random_filtered_5chordal(8, 30, 7);
  REQUIRE(g == gen_random_filtered_5chordal(8, 30, 7));
  REQUIRE(write_graph6(g) == "G`lKCC");
  REQUIRE(g.vertex_count() == 8);
  REQUIRE(is_connected(g));
  REQUIRE(is_k_chordal(g, 5));
  for (std::uint64_t s = 1; s <= 10; ++s) {
    Graph h = gen_random_filtered_5chordal(7, 40, s);
    REQUIRE(is_connected(h));
    REQUIRE(is_k_chordal(h, 5));
  }
}

TEST_CASE("canonical codes") {
  // invariance under relabeling
  Graph pet = named_graph("petersen");
  REQUIRE_THROWS_AS(canonical_code(Graph(12, {})), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (const char* nm : {"petersen", "K_3,3", "C_7", "K_2,2,2"}) {
    Graph g = named_graph(nm);
    const int n = g.vertex_count();
    const auto code = canonical_code(g);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Edge> es;
      for (auto [u, v] : g.edges()) {
        int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
        es.push_back({std::min(a, b), std::max(a, b)});
      }
      REQUIRE(canonical_code(Graph(n, es)) == code);
    }
  }
  REQUIRE(canonical_code(named_graph("C_4")) != canonical_code(named_graph("P_4")));

  // pruned placement equals the full-permutation reference
  for (const Graph& g : builtin_corpus(6))
    REQUIRE(canonical_code(g) == brute_canonical(g));
  REQUIRE(graph_from_code(canonical_code(pet), 10).edge_count() == 15);
  REQUIRE(canonical_code(graph_from_code(canonical_code(pet), 10)) ==
          canonical_code(pet));
}

TEST_CASE("builtin corpus counts") {
  // connected unlabeled graphs per order: 1, 1, 2, 6, 21, 112, 853
  auto corpus = builtin_corpus(7);
  std::array<long long, 8> per{};
  for (const auto& g : corpus) per[static_cast<std::size_t>(g.vertex_count())]++;
  REQUIRE(per == std::array<long long, 8>{0, 1, 1, 2, 6, 21, 112, 853});
  REQUIRE(corpus.size() == 996);

  auto window = builtin_corpus(5, 4);
  REQUIRE(window.size() == 27);
  for (const auto& g : window) {
    REQUIRE(g.vertex_count() >= 4);
    REQUIRE(g.vertex_count() <= 5);
    REQUIRE(is_connected(g));
  }
  REQUIRE_THROWS_AS(builtin_corpus(9), std::invalid_argument);
  REQUIRE_THROWS_AS(builtin_corpus(0), std::invalid_argument);

  // independent check at n <= 5: every labeled connected graph appears, and
  // the class count matches a from-scratch dedup
  for (int n = 2; n <= 5; ++n) {
    std::set<std::uint64_t> classes;
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
      std::vector<Edge> es;
      int k = 0;
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
          if (mask >> k & 1) es.push_back({u, v});
      Graph g(n, es);
      if (is_connected(g)) classes.insert(brute_canonical(g));
    }
    auto level = builtin_corpus(n, n);
    REQUIRE(level.size() == classes.size());
    std::set<std::uint64_t> emitted;
    for (const auto& g : level) emitted.insert(brute_canonical(g));
    REQUIRE(emitted == classes);
  }
}

TEST_CASE("graph6 stream reading") {
  std::istringstream in(">>graph6<<A_\r\nDhc\n\nC~\n");
  auto graphs = read_graph6_stream(in);
  REQUIRE(graphs.size() == 3);
  REQUIRE(graphs[0] == named_graph("K_2"));
  REQUIRE(graphs[1] == named_graph("C_5"));
  REQUIRE(graphs[2] == named_graph("K_4"));

  std::istringstream bad("A_\nD?\nC~\n");
  REQUIRE_THROWS_AS(read_graph6_stream(bad), ParseError);
  try {
    std::istringstream again("A_\nD?\nC~\n");
    read_graph6_stream(again);
  } catch (const ParseError& e) {
    REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
  }

  std::istringstream lax("A_\nD?\nC~\n");
  std::vector<std::string> warnings;
  auto kept = read_graph6_stream(lax, false, &warnings);
  REQUIRE(kept.size() == 2);
  REQUIRE(warnings.size() == 1);
  REQUIRE(warnings[0].find("line 2") != std::string::npos);
}

TEST_CASE("sweep over a fixture corpus") {
  std::vector<Graph> corpus = {named_graph("K_4"), named_graph("C_6"),
                               named_graph("C_5"), named_graph("petersen")};
  SweepOptions opt;
  opt.corpus_desc = "fixtures";
  std::vector<TheoremReport> rows;
  auto rep = run_sweep(corpus, opt, &rows);

  REQUIRE(rep.total == 4);
  REQUIRE(rows.size() == 4);
  REQUIRE(rep.counterexamples.empty());
  REQUIRE(rep.hypothesis_met == 1);  // K_4 alone: C_6 is 1-tough, the others fail 5-chordality
  REQUIRE(rep.conclusion_met == 4);
  REQUIRE(rep.inconclusive == 0);
  REQUIRE(!rep.any_violation());
  REQUIRE(rows[0].graph6 == "C~");
  REQUIRE(rows[3].graph6 == "IheA@GUAo");

  // lemma2 scans only the 5-chordal member: K_4 (C_6 is itself a 6-hole, and
  // C_5 / petersen carry 5-holes); its odd cycles are the four triangles
  REQUIRE(rep.lemma2_graphs == 1);
  REQUIRE(rep.lemma2_odd_cycles == 4);
  REQUIRE(rep.lemma2_failures_count == 0);
  REQUIRE(rep.lemma2_disagreements == 0);

  auto rep3 = run_sweep(corpus, [] {
    SweepOptions o;
    o.corpus_desc = "fixtures";
    o.jobs = 3;
    return o;
  }());
  REQUIRE(sweep_report_json(rep3).dump() == sweep_report_json(rep).dump());

  auto empty = run_sweep({}, SweepOptions{});
  REQUIRE(empty.total == 0);
  REQUIRE(!empty.any_violation());
}

TEST_CASE("sweep totals over the small corpus") {
  auto rep = run_sweep(builtin_corpus(6, 3), SweepOptions{});
  REQUIRE(rep.total == 141);
  REQUIRE(rep.hypothesis_met == 17);
  REQUIRE(rep.conclusion_met == 122);
  REQUIRE(rep.counterexamples.empty());
  REQUIRE(rep.inconclusive == 0);
  REQUIRE(rep.lemma2_graphs == 132);
  REQUIRE(rep.lemma2_odd_cycles == 1002);
  REQUIRE(rep.lemma2_failures_count == 0);
  REQUIRE(rep.lemma2_disagreements == 0);
  REQUIRE(rep.corollary_applicable[1] == 17);
  REQUIRE(rep.corollary_applicable[2] == 17);
  REQUIRE(rep.corollary_applicable[3] == 17);
  REQUIRE(rep.corollary2_literal_applicable == 17);
  REQUIRE(rep.corollary_failures.empty());

  const auto& rows = rep.no_edc_extremals;
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].n == static_cast<int>(i) + 3);
    REQUIRE(rows[i].max_toughness == Rational(1, 2));
  }
  REQUIRE(rows[0].count == 1);
  REQUIRE(rows[1].count == 2);
  REQUIRE(rows[2].count == 5);
  REQUIRE(rows[3].count == 21);

  // every extremal witness replays: 5-chordal, toughness as reported, no EDC
  for (const auto& row : rows) {
    Graph w = parse_graph6(row.witness_graph6);
    REQUIRE(is_k_chordal(w, 5));
    REQUIRE(toughness(w).value == row.max_toughness);
    REQUIRE(find_edge_dominating_cycle(w).status == EdcStatus::none);
  }
}

TEST_CASE("exploration table") {
  auto rows = explore_edc_toughness(builtin_corpus(6));
  REQUIRE(rows.size() == 6);
  REQUIRE(rows[0].graphs_seen == 1);
  REQUIRE(rows[0].no_edc == 1);  // K_1 has no cycle at all
  REQUIRE(rows[0].max_toughness == Rational::infinity());
  for (int i = 2; i < 6; ++i) {
    REQUIRE(rows[static_cast<std::size_t>(i)].n == i + 1);
    REQUIRE(rows[static_cast<std::size_t>(i)].max_toughness == Rational(1, 2));
    REQUIRE(rows[static_cast<std::size_t>(i)].inconclusive == 0);
  }
  REQUIRE(rows[2].no_edc == 1);
  REQUIRE(rows[3].no_edc == 2);
  REQUIRE(rows[4].no_edc == 5);
  REQUIRE(rows[5].no_edc == 21);
  REQUIRE(rows[5].graphs_seen == 112);

  auto star = explore_edc_toughness({named_graph("star_5")});
  REQUIRE(star.size() == 1);
  REQUIRE(star[0].no_edc == 1);
  REQUIRE(star[0].max_toughness == Rational(1, 4));

  auto json = explore_table_json(rows);
  REQUIRE(json.is_array());
  REQUIRE(json.size() == 6);
  REQUIRE(json[2]["max_toughness_no_edc"] == "1/2");
  REQUIRE(json[2]["n"] == 3);
}
