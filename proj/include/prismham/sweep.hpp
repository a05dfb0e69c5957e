#pragma once

#include <array>
#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "prismham/cycles.hpp"
#include "prismham/graph.hpp"
#include "prismham/invariants.hpp"
#include "prismham/parity_triangle.hpp"
#include "prismham/prism_ham.hpp"

namespace prismham {

enum class SweepCheck { theorem, lemma2, corollaries, all };

struct SweepOptions {
  SweepCheck check = SweepCheck::all;
  int jobs = 1;
  VerifyOptions verify;
  std::string corpus_desc;
  std::size_t failure_listing_cap = 50;  // detailed failure strings kept per kind
};

struct NoEdcRow {
  int n = 0;
  long long count = 0;  // 5-chordal graphs of this order with provably no EDC
  Rational max_toughness;
  std::string witness_graph6;  // first graph attaining the maximum
};

struct SweepReport {
  std::string corpus_desc;
  long long total = 0;
  long long hypothesis_met = 0;
  long long conclusion_met = 0;
  long long fallback_activations = 0;
  long long inconclusive = 0;
  std::vector<std::string> counterexamples;  // hypothesis held, prism refuted
  std::vector<NoEdcRow> no_edc_extremals;
  long long lemma2_graphs = 0;
  long long lemma2_odd_cycles = 0;
  long long lemma2_failures_count = 0;
  long long lemma2_disagreements = 0;
  std::vector<std::string> lemma2_failures;
  std::array<long long, 4> corollary_applicable{};  // index 1..3
  long long corollary2_literal_applicable = 0;
  std::vector<std::string> corollary_failures;

  bool any_violation() const {
    return !counterexamples.empty() || lemma2_failures_count > 0 ||
           lemma2_disagreements > 0 || !corollary_failures.empty();
  }
};

namespace detail {

struct SweepCell {
  std::optional<TheoremReport> theorem;
  bool lemma2_ran = false;
  long long odd_cycles = 0;
  long long fallbacks = 0;
  long long lemma2_fail = 0;
  long long lemma2_disagree = 0;
  std::vector<std::string> lemma2_failures;
  std::array<std::optional<CorollaryReport>, 4> cor;
  bool extra_inconclusive = false;  // from lemma2/corollary budget hits
};

inline void sweep_one(const Graph& g, const SweepOptions& opt, SweepCell& cell) {
  const bool do_theorem =
      opt.check == SweepCheck::theorem || opt.check == SweepCheck::all;
  const bool do_lemma2 = opt.check == SweepCheck::lemma2 || opt.check == SweepCheck::all;
  const bool do_cor =
      opt.check == SweepCheck::corollaries || opt.check == SweepCheck::all;

  if (do_theorem) {
    cell.theorem = verify_theorem(g, opt.verify);
    if (cell.theorem->triangle && cell.theorem->triangle->used_fallback)
      ++cell.fallbacks;
  }

  if (do_lemma2) {
    std::optional<bool> chordal5;
    if (cell.theorem) {
      chordal5 = cell.theorem->chordal5;
    } else {
      try {
        chordal5 = is_k_chordal(g, 5, opt.verify.hole_cap);
      } catch (const ResourceError&) {
        cell.extra_inconclusive = true;
      }
    }
    if (chordal5 == true) {
      cell.lemma2_ran = true;
      CycleQuery q;
      q.parity = Parity::odd;
      q.limit = opt.verify.cycle_limit;
      const CycleList odd = enumerate_cycles(g, q);
      if (!odd.complete) cell.extra_inconclusive = true;
      for (const Cycle& c : odd.cycles) {
        ++cell.odd_cycles;
        const ParityTriangleResult res = find_parity_triangle(g, c);
        const auto oracle = brute_force_parity_triangle(g, c);
        if (res.used_fallback) ++cell.fallbacks;
        if ((res.status == PtStatus::found) != oracle.has_value()) {
          ++cell.lemma2_disagree;
          cell.lemma2_failures.push_back("disagreement on " + write_graph6(g) +
                                         " cycle [" + c.str() + "]");
        }
        if (!oracle) {
          ++cell.lemma2_fail;
          cell.lemma2_failures.push_back("no parity triangle on " + write_graph6(g) +
                                         " cycle [" + c.str() + "]");
        }
      }
    }
  }

  if (do_cor) {
    for (int which = 1; which <= 3; ++which) {
      cell.cor[static_cast<std::size_t>(which)] = check_corollary(g, which, opt.verify);
      if (cell.cor[static_cast<std::size_t>(which)]->inconclusive)
        cell.extra_inconclusive = true;
    }
  }
}

}  // namespace detail

// Runs the selected checks over the corpus, fanning graphs out to a worker
// pool; cells are slotted by corpus index so the aggregate is independent of
// scheduling.  `rows` (optional) receives the per-graph theorem reports in
// corpus order.
inline SweepReport run_sweep(const std::vector<Graph>& corpus, const SweepOptions& opt = {},
                             std::vector<TheoremReport>* rows = nullptr) {
  std::vector<detail::SweepCell> cells(corpus.size());
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || corpus.size() <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i)
      detail::sweep_one(corpus[i], opt, cells[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= corpus.size()) return;
        detail::sweep_one(corpus[i], opt, cells[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SweepReport rep;
  rep.corpus_desc = opt.corpus_desc;
  std::map<int, NoEdcRow> extremals;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const detail::SweepCell& cell = cells[i];
    ++rep.total;
    bool inconclusive = cell.extra_inconclusive;
    if (cell.theorem) {
      const TheoremReport& tr = *cell.theorem;
      if (rows) rows->push_back(tr);
      inconclusive |= tr.inconclusive;
      if (tr.hypothesis_met) ++rep.hypothesis_met;
      if (tr.conclusion_met) ++rep.conclusion_met;
      if (tr.hypothesis_met && !tr.conclusion_met)
        rep.counterexamples.push_back(tr.graph6);
      if (tr.chordal5 == true && tr.edc.status == EdcStatus::none) {
        NoEdcRow& row = extremals[corpus[i].vertex_count()];
        row.n = corpus[i].vertex_count();
        ++row.count;
        if (row.witness_graph6.empty() || tr.tough.value > row.max_toughness) {
          row.max_toughness = tr.tough.value;
          row.witness_graph6 = tr.graph6;
        }
      }
    }
    if (cell.lemma2_ran) {
      ++rep.lemma2_graphs;
      rep.lemma2_odd_cycles += cell.odd_cycles;
      rep.lemma2_failures_count += cell.lemma2_fail;
      rep.lemma2_disagreements += cell.lemma2_disagree;
      for (const std::string& s : cell.lemma2_failures)
        if (rep.lemma2_failures.size() < opt.failure_listing_cap)
          rep.lemma2_failures.push_back(s);
    }
    rep.fallback_activations += cell.fallbacks;
    for (int which = 1; which <= 3; ++which) {
      const auto& cr = cell.cor[static_cast<std::size_t>(which)];
      if (!cr) continue;
      if (cr->applicable) ++rep.corollary_applicable[static_cast<std::size_t>(which)];
      if (which == 2 && cr->applicable_literal) ++rep.corollary2_literal_applicable;
      if (!cr->ok && rep.corollary_failures.size() < opt.failure_listing_cap)
        rep.corollary_failures.push_back("corollary " + std::to_string(which) +
                                         " fails on " + write_graph6(corpus[i]));
    }
    if (inconclusive) ++rep.inconclusive;
  }
  for (auto& [n, row] : extremals) rep.no_edc_extremals.push_back(row);
  return rep;
}

// Remarks exploration: per order n, the maximum toughness over connected
// 5-chordal graphs with provably no edge-dominating cycle.  Any sufficient
// toughness threshold for EDC existence must exceed these values.
struct ExploreRow {
  int n = 0;
  long long graphs_seen = 0;
  long long no_edc = 0;
  bool any = false;
  Rational max_toughness;
  std::string witness_graph6;
  long long inconclusive = 0;
};

inline std::vector<ExploreRow> explore_edc_toughness(const std::vector<Graph>& corpus,
                                                     const VerifyOptions& vo = {},
                                                     int jobs = 1) {
  struct Cell {
    int n = 0;
    bool five_chordal = false;
    bool no_edc = false;
    bool inconclusive = false;
    Rational tough;
    std::string g6;
  };
  std::vector<Cell> cells(corpus.size());
  auto work = [&](std::size_t i) {
    const Graph& g = corpus[i];
    Cell& c = cells[i];
    c.n = g.vertex_count();
    c.g6 = write_graph6(g);
    try {
      c.five_chordal = is_k_chordal(g, 5, vo.hole_cap);
    } catch (const ResourceError&) {
      c.inconclusive = true;
      return;
    }
    if (!c.five_chordal) return;
    const EdcResult edc = find_edge_dominating_cycle(g, EdcOrder::longest_first,
                                                     vo.cycle_limit);
    if (edc.status == EdcStatus::unknown) {
      c.inconclusive = true;
      return;
    }
    if (edc.status == EdcStatus::none) {
      c.no_edc = true;
      c.tough = toughness(g).value;
    }
  };
  const int njobs = std::max(1, jobs);
  if (njobs == 1 || corpus.size() <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < njobs; ++t)
      pool.emplace_back([&]() {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= corpus.size()) return;
          work(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  std::map<int, ExploreRow> rows;
  for (const Cell& c : cells) {
    ExploreRow& r = rows[c.n];
    r.n = c.n;
    ++r.graphs_seen;
    if (c.inconclusive) ++r.inconclusive;
    if (c.no_edc) {
      ++r.no_edc;
      if (!r.any || c.tough > r.max_toughness) {
        r.any = true;
        r.max_toughness = c.tough;
        r.witness_graph6 = c.g6;
      }
    }
  }
  std::vector<ExploreRow> out;
  for (auto& [n, r] : rows) out.push_back(r);
  return out;
}

// ---------------------------------------------------------------------------
// Line-delimited serialization (stable field names)

inline nlohmann::ordered_json theorem_report_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["toughness"] = r.tough.value.str();
  if (r.chordal5)
    j["chordal5"] = *r.chordal5;
  else
    j["chordal5"] = nullptr;
  switch (r.edc.status) {
    case EdcStatus::found:
      j["edc"] = r.edc.cycle->str();
      j["edc_parity"] = r.edc.cycle->odd() ? "odd" : "even";
      break;
    case EdcStatus::none:
      j["edc"] = "none";
      j["edc_parity"] = nullptr;
      break;
    case EdcStatus::unknown:
      j["edc"] = "unknown";
      j["edc_parity"] = nullptr;
      break;
  }
  if (r.triangle && r.triangle->witness && r.edc.cycle)
    j["triangle"] = witness_str(*r.edc.cycle, *r.triangle->witness);
  else
    j["triangle"] = nullptr;
  switch (r.prism_result.status) {
    case HamStatus::found:
      j["prism_ham"] = r.prism_result.cycle->str();
      break;
    case HamStatus::refuted:
      j["prism_ham"] = "refuted";
      break;
    case HamStatus::unknown:
      j["prism_ham"] = "unknown";
      break;
  }
  j["hypothesis"] = r.hypothesis_met;
  j["conclusion"] = r.conclusion_met;
  return j;
}

inline nlohmann::ordered_json sweep_report_json(const SweepReport& r) {
  nlohmann::ordered_json j;
  j["corpus"] = r.corpus_desc;
  j["total"] = r.total;
  j["hypothesis_met"] = r.hypothesis_met;
  j["conclusion_met"] = r.conclusion_met;
  j["fallback_activations"] = r.fallback_activations;
  j["inconclusive"] = r.inconclusive;
  j["counterexamples"] = r.counterexamples;
  nlohmann::ordered_json ex = nlohmann::ordered_json::array();
  for (const NoEdcRow& row : r.no_edc_extremals) {
    nlohmann::ordered_json o;
    o["n"] = row.n;
    o["count"] = row.count;
    o["max_toughness"] = row.max_toughness.str();
    o["witness"] = row.witness_graph6;
    ex.push_back(o);
  }
  j["no_edc_extremals"] = ex;
  j["lemma2_graphs"] = r.lemma2_graphs;
  j["lemma2_odd_cycles"] = r.lemma2_odd_cycles;
  j["lemma2_failures"] = r.lemma2_failures_count;
  j["lemma2_disagreements"] = r.lemma2_disagreements;
  j["lemma2_failure_detail"] = r.lemma2_failures;
  nlohmann::ordered_json cor;
  cor["c1_applicable"] = r.corollary_applicable[1];
  cor["c2_applicable"] = r.corollary_applicable[2];
  cor["c2_literal_applicable"] = r.corollary2_literal_applicable;
  cor["c3_applicable"] = r.corollary_applicable[3];
  cor["failures"] = r.corollary_failures;
  j["corollaries"] = cor;
  return j;
}

inline nlohmann::ordered_json explore_table_json(const std::vector<ExploreRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ExploreRow& r : rows) {
    nlohmann::ordered_json o;
    o["n"] = r.n;
    o["graphs"] = r.graphs_seen;
    o["no_edc"] = r.no_edc;
    if (r.any) {
      o["max_toughness_no_edc"] = r.max_toughness.str();
      o["witness"] = r.witness_graph6;
    } else {
      o["max_toughness_no_edc"] = nullptr;
      o["witness"] = nullptr;
    }
    o["inconclusive"] = r.inconclusive;
    arr.push_back(o);
  }
  return arr;
}

}  // namespace prismham
