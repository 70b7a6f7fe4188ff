#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// with in-memory streams.
//
// Exit codes: 0 success or pass, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgegp.hpp"
#include "json.hpp"

namespace edgegp::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::Malformed, "cannot read " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline std::vector<Graph> read_graphs(const std::string& text, const std::string& format) {
  const Format f = format.empty() ? detect_format(text)
                                  : (format == "graph6" ? Format::Graph6 : Format::EdgeList);
  if (f == Format::Graph6) {
    auto graphs = parse_graph6_stream(text);
    if (graphs.empty()) throw Error(ErrorCode::Truncated, "no graph in input");
    return graphs;
  }
  return {parse_edgelist(text)};
}

inline std::string render_graph(const Graph& g, const std::string& format) {
  return format == "edgelist" ? write_edgelist(g) : write_graph6(g) + "\n";
}

inline json bounds_json(const std::optional<BlockBounds>& b) {
  if (!b) return nullptr;
  return {{"s_prime", b->s_prime}, {"upper", b->upper}};
}

inline json result_json(const Graph& g, const ComputeOutcome& c) {
  return {{"n", g.order()},
          {"m", g.size()},
          {"gpe", c.result.value},
          {"method", c.result.method},
          {"witness", c.result.witness},
          {"delta", g.max_degree()},
          {"bounds", bounds_json(c.result.bounds)},
          {"components", c.components}};
}

inline json classification_json(const ClassificationResult& c) {
  json j = {{"n", c.n},
            {"m", c.m},
            {"max_degree", c.max_degree},
            {"is_path", c.is_path},
            {"is_cycle", c.is_cycle},
            {"is_tree", c.is_tree},
            {"is_complete", c.is_complete},
            {"is_block_graph", c.is_block_graph},
            {"is_thick_leaved", c.is_thick_leaved},
            {"is_bipartite", c.is_bipartite},
            {"diameter", c.diameter},
            {"leaf_count", c.leaf_count},
            {"girth", c.girth ? json(*c.girth) : json(nullptr)},
            {"membership_G1", nullptr},
            {"membership_G2", nullptr},
            {"block_bounds", bounds_json(c.block_bounds)}};
  if (c.membership_G1)
    j["membership_G1"] = {{"special_edge", c.membership_G1->special_edge},
                          {"leaf", c.membership_G1->leaf},
                          {"attach", c.membership_G1->attach}};
  if (c.membership_G2)
    j["membership_G2"] = {{"central_edge", c.membership_G2->central_edge},
                          {"x1", c.membership_G2->x1},
                          {"x2", c.membership_G2->x2},
                          {"A", c.membership_G2->common},
                          {"B1", c.membership_G2->private1},
                          {"B2", c.membership_G2->private2}};
  return j;
}

inline json report_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"graph", f.graph}, {"expected", f.expected}, {"got", f.got}});
  return {{"theorem", r.theorem},
          {"scope", r.scope},
          {"checked", r.checked},
          {"pass", r.pass},
          {"failures", failures},
          {"wall_seconds", r.wall_seconds}};
}

/// Conflict triples of every component, in the edge ids of g.
inline std::vector<ConflictTriple> all_conflicts(const Graph& g) {
  std::vector<ConflictTriple> out;
  for (const auto& comp : g.components()) {
    const Graph h = g.induced(comp);
    if (h.size() < 3) continue;
    for (auto t : build_conflicts(h).sorted_triples()) {
      for (auto& e : t) e = *g.edge_id(comp[h.edge(e).u], comp[h.edge(e).v]);
      std::sort(t.begin(), t.end());
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadParameters, "bad range '" + text + "', expected N or A..B");
  }
}

inline int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Edge general position number of graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  bool as_json = false;
  std::size_t jobs = default_jobs();
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Graph format: edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--jobs", jobs, "Worker threads (default: EDGEGP_JOBS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for random families and sampling");

  std::string input;
  std::string method = "auto";
  auto* compute = app.add_subcommand("compute", "Compute gp_e with a witness set");
  compute->add_option("input", input, "Graph file (default stdin)");
  compute->add_option("--method", method, "auto, exact or brute")
      ->check(CLI::IsMember({"auto", "exact", "brute"}));

  auto* classify_cmd = app.add_subcommand("classify", "Report graph classes and family witnesses");
  classify_cmd->add_option("input", input, "Graph file (default stdin)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduction of a block graph");
  reduce_cmd->add_option("input", input, "Graph file (default stdin)");

  auto* conflicts = app.add_subcommand("conflicts", "Edge triples on a common geodesic");
  conflicts->add_option("input", input, "Graph file (default stdin)");

  std::string family;
  std::vector<std::uint64_t> params;
  auto* gen = app.add_subcommand("gen", "Generate a family member");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", params, "Integer parameters");

  std::string tag, range, corpus_file;
  std::size_t sample = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem over a corpus");
  verify_cmd->add_option("theorem", tag, "oracle, diam2, m1, gpe2, gpe3, gpe4nec, blockbounds, "
                                         "reduction, thickleaved, smallclasses")
      ->required();
  verify_cmd->add_option("--n", range, "Enumerate connected labelled graphs, N or A..B (<= 7)");
  verify_cmd->add_option("--sample", sample, "Draw K seeded connected graphs per order instead");
  verify_cmd->add_option("--corpus", corpus_file, "graph6 file, one graph per line");

  std::vector<std::string> argv_store{"edgegp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      const Method m = method == "exact" ? Method::Exact
                       : method == "brute" ? Method::Brute
                                           : Method::Auto;
      for (const Graph& g : read_graphs(read_source(input, io.in), format)) {
        const auto outcome = compute_gpe(g, m);
        if (outcome.components > 1)
          io.err << "warning: graph has " << outcome.components
                 << " components; gp_e is the sum over components\n";
        if (as_json) {
          io.out << result_json(g, outcome).dump() << '\n';
          continue;
        }
        io.out << "gpe = " << outcome.result.value << '\n';
        io.out << "method: " << outcome.result.method << '\n';
        io.out << "witness:";
        for (EdgeId e : outcome.result.witness) io.out << ' ' << g.edge(e).u << '-' << g.edge(e).v;
        io.out << '\n';
      }
      return kExitOk;
    }
    if (classify_cmd->parsed()) {
      for (const Graph& g : read_graphs(read_source(input, io.in), format)) {
        const auto c = classify(g);
        io.out << (as_json ? classification_json(c).dump() : classification_json(c).dump(2)) << '\n';
      }
      return kExitOk;
    }
    if (reduce_cmd->parsed()) {
      for (const Graph& g : read_graphs(read_source(input, io.in), format))
        io.out << render_graph(reduce(g), format.empty() ? "graph6" : format);
      return kExitOk;
    }
    if (conflicts->parsed()) {
      for (const Graph& g : read_graphs(read_source(input, io.in), format)) {
        const auto triples = all_conflicts(g);
        if (as_json) {
          io.out << json{{"m", g.size()}, {"triples", triples}}.dump() << '\n';
          continue;
        }
        for (const auto& t : triples) io.out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
      }
      return kExitOk;
    }
    if (gen->parsed()) {
      const auto f = parse_family(family);
      if (!f) throw Error(ErrorCode::BadParameters, "unknown family '" + family + "'");
      io.out << render_graph(generate({*f, params, seed}), format.empty() ? "graph6" : format);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto theorem = parse_theorem(tag);
      if (!theorem) throw Error(ErrorCode::BadParameters, "unknown theorem tag '" + tag + "'");
      Corpus corpus;
      if (!corpus_file.empty()) {
        corpus.graphs = parse_graph6_stream(read_source(corpus_file, io.in));
        corpus.describe("corpus " + corpus_file);
      } else if (!range.empty()) {
        const auto [lo, hi] = parse_range(range);
        if (lo < 1 || hi > kMaxEnumerationOrder || lo > hi)
          throw Error(ErrorCode::BadParameters, "--n must lie within 1..7");
        if (sample > 0)
          add_samples(corpus, lo, hi, sample, seed);
        else
          add_enumeration(corpus, lo, hi);
      } else {
        corpus = default_corpus(*theorem, seed);
      }
      const auto report = verify(*theorem, corpus, jobs);
      if (as_json) {
        io.out << report_json(report).dump() << '\n';
      } else {
        io.out << "verify " << report.theorem << ": " << (report.pass ? "PASS" : "FAIL") << " ("
               << report.checked << " graphs, " << report.failures.size() << " failures, "
               << report.wall_seconds << " s)\n";
        io.out << "scope: " << report.scope << '\n';
        for (const auto& f : report.failures)
          io.out << "  " << f.graph << "  expected " << f.expected << "  got " << f.got << '\n';
      }
      return report.pass ? kExitOk : kExitFail;
    }
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace edgegp::cli
