// command line surface for the prism-Hamiltonicity toolkit
//
// exit codes: 0 ok, 1 violation or counterexample, 2 input error,
//             3 budget exhausted somewhere (result inconclusive)

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prismham/corpus.hpp"
#include "prismham/cycles.hpp"
#include "prismham/generators.hpp"
#include "prismham/graph.hpp"
#include "prismham/invariants.hpp"
#include "prismham/parity_triangle.hpp"
#include "prismham/prism_ham.hpp"
#include "prismham/sweep.hpp"

using namespace prismham;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  if (format == "dimacs") return parse_dimacs(text);
  // graph6: first nonempty line, banner stripped
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (!line.empty()) return parse_graph6(line);
  }
  throw ParseError("graph6: no data line in " + path, 0);
}

std::string set_str(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.to_vector()) {
    if (!first) out += ' ';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void print_chordality(const Graph& g, int k, int cap, bool& inconclusive) {
  std::cout << "chordal" << k << ": ";
  try {
    const auto hole = find_hole(g, k, cap);
    if (hole)
      std::cout << "no  hole: [" << hole->str() << "]\n";
    else
      std::cout << "yes\n";
  } catch (const ResourceError& re) {
    std::cout << "unknown (" << re.what() << ")\n";
    inconclusive = true;
  }
}

std::vector<Edge> parse_chord_list(const std::string& text) {
  // "0-3+0-5" -> {(0,3),(0,5)}
  std::vector<Edge> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, '+')) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
      throw std::invalid_argument("bad chord token " + tok);
    out.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
  }
  return out;
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad parameter " + tok);
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

int need_int(const std::map<std::string, std::string>& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter " + key);
  return std::stoi(it->second);
}

Graph build_family(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const auto params =
      colon == std::string::npos ? std::map<std::string, std::string>{}
                                 : parse_params(spec.substr(colon + 1));
  if (family == "random_chordal")
    return gen_random_chordal(need_int(params, "n"), need_int(params, "m"), seed);
  if (family == "cycle_plus_chords") {
    const auto it = params.find("chords");
    return gen_cycle_plus_chords(need_int(params, "n"),
                                 it == params.end() ? std::vector<Edge>{}
                                                    : parse_chord_list(it->second));
  }
  if (family == "random_filtered_5chordal")
    return gen_random_filtered_5chordal(need_int(params, "n"),
                                        need_int(params, "density"), seed);
  return named_graph(family);
}

std::vector<Graph> load_corpus(const std::string& corpus_file, int max_n, int min_n) {
  if (corpus_file.empty()) return builtin_corpus(max_n, min_n);
  const std::string text = slurp(corpus_file);
  std::istringstream in(text);
  std::vector<Graph> all = read_graph6_stream(in, /*strict=*/true);
  std::vector<Graph> out;
  for (Graph& g : all)
    if (g.vertex_count() >= min_n && g.vertex_count() <= max_n)
      out.push_back(std::move(g));
  return out;
}

std::string prism_cycle_str(const Cycle& c, int base_n) {
  std::string out;
  for (int i = 0; i < c.length(); ++i) {
    const PrismVertex pv = prism_vertex(c.vertex(i), base_n);
    if (i) out += ' ';
    out += "(" + std::to_string(pv.base) + "," + std::to_string(pv.layer) + ")";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for prism-Hamiltonicity of tough 5-chordal graphs"};
  app.require_subcommand(1);
  int rc = 0;

  std::string file, format = "graph6";
  std::string cycle_arg, family, corpus_file, check_name = "all";
  bool want_ham = false, emit_rows = true;
  int max_n = 7, min_n = 1, jobs = 1;
  std::uint64_t seed = 0;
  std::uint64_t ham_budget = 100'000'000;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", file, "input graph file, - for stdin")->required();
    sub->add_option("--format", format, "graph6|dimacs")
        ->check(CLI::IsMember({"graph6", "dimacs"}));
  };

  auto* analyze = app.add_subcommand("analyze", "structural invariants of one graph");
  add_input(analyze);
  analyze->callback([&]() {
    const Graph g = load_graph(file, format);
    bool inconclusive = false;
    std::cout << "graph6: " << write_graph6(g) << "\n";
    std::cout << "n: " << g.vertex_count() << "  m: " << g.edge_count() << "\n";
    std::cout << "connected: " << (is_connected(g) ? "yes" : "no") << "\n";
    if (g.vertex_count() >= 2)
      std::cout << "connectivity: " << vertex_connectivity(g) << "\n";
    const ToughnessCertificate t = toughness(g);
    std::cout << "toughness: " << t.value.str();
    if (!t.value.is_infinite() && !t.degenerate)
      std::cout << "  separator: " << set_str(t.separator)
                << "  components: " << t.component_count;
    if (t.degenerate) std::cout << "  (disconnected input)";
    std::cout << "\n";
    for (int k : {3, 4, 5}) print_chordality(g, k, 16, inconclusive);
    if (inconclusive) rc = 3;
  });

  auto* edc_cmd = app.add_subcommand("edc", "search for an edge-dominating cycle");
  add_input(edc_cmd);
  std::string prefer = "longest";
  edc_cmd->add_option("--prefer", prefer, "longest|shortest")
      ->check(CLI::IsMember({"longest", "shortest"}));
  edc_cmd->callback([&]() {
    const Graph g = load_graph(file, format);
    const EdcResult r = find_edge_dominating_cycle(
        g, prefer == "longest" ? EdcOrder::longest_first : EdcOrder::shortest_first);
    switch (r.status) {
      case EdcStatus::found:
        std::cout << "edc: found\ncycle: " << r.cycle->str() << "\nlength: "
                  << r.cycle->length() << "  parity: "
                  << (r.cycle->odd() ? "odd" : "even") << "\n";
        break;
      case EdcStatus::none:
        std::cout << "edc: none\n";
        if (r.uncovered_edge)
          std::cout << "best candidate left edge (" << r.uncovered_edge->first << ","
                    << r.uncovered_edge->second << ") uncovered\n";
        rc = 1;
        break;
      case EdcStatus::unknown:
        std::cout << "edc: unknown (cycle budget exhausted)\n";
        rc = 3;
        break;
    }
  });

  auto* tri = app.add_subcommand("triangle", "parity triangle on a given odd cycle");
  add_input(tri);
  tri->add_option("--cycle", cycle_arg, "comma separated vertices, e.g. 0,1,2,3,4")
      ->required();
  tri->callback([&]() {
    const Graph g = load_graph(file, format);
    std::vector<int> verts;
    std::istringstream in(cycle_arg);
    std::string tok;
    while (std::getline(in, tok, ',')) verts.push_back(std::stoi(tok));
    const Cycle c(g, verts);
    if (!c.odd()) throw std::invalid_argument("triangle: cycle has even length");
    std::cout << "cycle: " << c.str() << " (length " << c.length() << ")\n";
    const ParityTriangleResult r = find_parity_triangle(g, c);
    for (const std::string& line : trace_lines(c, r.trace)) std::cout << line << "\n";
    switch (r.status) {
      case PtStatus::found:
        std::cout << "witness: " << witness_str(c, *r.witness) << "\n";
        std::cout << "fallback: " << (r.used_fallback ? "yes" : "no") << "\n";
        break;
      case PtStatus::no_chord: {
        std::cout << "no chord on sub-cycle [";
        const auto& ev = *r.chordless_subcycle;
        for (std::size_t i = 0; i < ev.size(); ++i)
          std::cout << (i ? " " : "") << ev[i];
        std::cout << "]: graph is not 5-chordal; no triangle found\n";
        rc = 1;
        break;
      }
      case PtStatus::no_triangle:
        std::cout << "no parity triangle exists on this cycle\n";
        rc = 1;
        break;
    }
  });

  auto* prism_cmd = app.add_subcommand("prism", "prism construction and Hamiltonicity");
  add_input(prism_cmd);
  prism_cmd->add_flag("--ham", want_ham, "search the prism for a Hamiltonian cycle");
  prism_cmd->add_option("--budget", ham_budget, "backtrack node budget");
  prism_cmd->callback([&]() {
    const Graph g = load_graph(file, format);
    const Graph pr = prism(g);
    std::cout << "prism graph6: " << write_graph6(pr) << "\n";
    std::cout << "prism n: " << pr.vertex_count() << "  m: " << pr.edge_count()
              << "  (vertex (v,layer) is numbered v + layer*" << g.vertex_count()
              << ")\n";
    if (!want_ham) return;
    const HamResult h = find_hamiltonian_cycle(pr, ham_budget);
    switch (h.status) {
      case HamStatus::found:
        std::cout << "hamiltonian: yes\ncycle: " << h.cycle->str() << "\n";
        std::cout << "as (base,layer): " << prism_cycle_str(*h.cycle, g.vertex_count())
                  << "\n";
        break;
      case HamStatus::refuted:
        std::cout << "hamiltonian: no (exhaustive, " << h.nodes << " nodes)\n";
        rc = 1;
        break;
      case HamStatus::unknown:
        std::cout << "hamiltonian: unknown (budget of " << ham_budget
                  << " nodes exhausted)\n";
        rc = 3;
        break;
    }
  });

  auto* verify = app.add_subcommand("verify", "full theorem pipeline on one graph");
  add_input(verify);
  verify->add_option("--budget", ham_budget, "backtrack node budget");
  verify->callback([&]() {
    const Graph g = load_graph(file, format);
    VerifyOptions vo;
    vo.ham_budget = ham_budget;
    const TheoremReport r = verify_theorem(g, vo);
    std::cout << theorem_report_json(r).dump() << "\n";
    if (r.hypothesis_met && !r.conclusion_met)
      rc = 1;
    else if (r.inconclusive)
      rc = 3;
  });

  auto* gen = app.add_subcommand("gen", "emit a generated graph as graph6");
  gen->add_option("--family", family,
                  "petersen | C_n | P_n | K_n | K_a,b | K_a,b,c | wheel_n | star_n | "
                  "random_chordal:n=..,m=.. | cycle_plus_chords:n=..,chords=a-b+c-d | "
                  "random_filtered_5chordal:n=..,density=..")
      ->required();
  gen->add_option("--seed", seed, "rng seed for the random families");
  gen->callback([&]() { std::cout << write_graph6(build_family(family, seed)) << "\n"; });

  auto* sweep = app.add_subcommand("sweep", "run checks over a graph corpus");
  sweep->add_option("--max-n", max_n, "largest order to include")->required();
  sweep->add_option("--min-n", min_n, "smallest order to include");
  sweep->add_option("--corpus", corpus_file, "graph6 corpus file (default: builtin)");
  sweep->add_option("--check", check_name, "theorem|lemma2|corollaries|all")
      ->check(CLI::IsMember({"theorem", "lemma2", "corollaries", "all"}));
  sweep->add_option("--jobs", jobs, "worker threads");
  sweep->add_flag("!--no-rows", emit_rows, "suppress per-graph report lines");
  sweep->callback([&]() {
    const std::vector<Graph> corpus = load_corpus(corpus_file, max_n, min_n);
    SweepOptions so;
    so.jobs = jobs;
    so.corpus_desc = corpus_file.empty()
                         ? "builtin connected graphs n<=" + std::to_string(max_n)
                         : corpus_file + " filtered to n<=" + std::to_string(max_n);
    if (check_name == "theorem") so.check = SweepCheck::theorem;
    if (check_name == "lemma2") so.check = SweepCheck::lemma2;
    if (check_name == "corollaries") so.check = SweepCheck::corollaries;
    std::vector<TheoremReport> rows;
    const SweepReport rep = run_sweep(corpus, so, &rows);
    if (emit_rows)
      for (const TheoremReport& r : rows)
        std::cout << theorem_report_json(r).dump() << "\n";
    std::cout << sweep_report_json(rep).dump() << "\n";
    if (rep.any_violation())
      rc = 1;
    else if (rep.inconclusive > 0)
      rc = 3;
  });

  auto* explore = app.add_subcommand(
      "explore", "max toughness of 5-chordal graphs with no edge-dominating cycle");
  explore->add_option("--max-n", max_n, "largest order to include")->required();
  explore->add_option("--min-n", min_n, "smallest order to include");
  explore->add_option("--corpus", corpus_file, "graph6 corpus file (default: builtin)");
  explore->add_option("--jobs", jobs, "worker threads");
  explore->callback([&]() {
    const std::vector<Graph> corpus = load_corpus(corpus_file, max_n, min_n);
    const auto rows = explore_edc_toughness(corpus, {}, jobs);
    for (const auto& row : explore_table_json(rows)) std::cout << row.dump() << "\n";
    for (const auto& row : rows)
      if (row.inconclusive > 0) rc = 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints message or help text
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
