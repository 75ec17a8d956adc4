#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "unidist/unidist.hpp"

namespace unidist::cli {

struct CliConfig {
  std::string command;  // dist | decompose | classify | gen | oracle | bench
  std::optional<std::string> degseq;      // inline sequence text
  std::optional<std::string> edges_path;  // "-" reads stdin
  bool json = false;
  bool compact_only = false;
  u64 cap = default_oracle_cap;
  u64 seed = 0;

  std::string family;       // gen
  std::vector<u64> params;  // gen

  std::string oracle_action;               // aut | dist | count | split | iso
  u64 colors = 0;                          // oracle count
  std::optional<std::string> edges2_path;  // oracle iso

  std::vector<u64> sizes;  // bench
};

enum ExitCode : int {
  exit_ok = 0,
  exit_not_unigraph = 1,
  exit_bad_input = 2,
  exit_too_large = 3,
};

namespace detail {

inline std::string read_source(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    std::ostringstream buf;
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw parse_error("cannot open file: " + path, 0);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

inline ParsedSequence load_sequence(const CliConfig& cfg, std::istream& in) {
  if (cfg.degseq && cfg.edges_path)
    throw std::invalid_argument("give exactly one of --degseq and --edges");
  if (cfg.degseq) return parse_degree_sequence_text(*cfg.degseq);
  if (cfg.edges_path) return degree_sequence_of(parse_edge_list(read_source(*cfg.edges_path, in)));
  throw std::invalid_argument("give exactly one of --degseq and --edges");
}

inline Graph load_graph(const CliConfig& cfg, std::istream& in) {
  if (!cfg.edges_path) throw std::invalid_argument("this command needs --edges");
  return parse_edge_list(read_source(*cfg.edges_path, in));
}

inline nlohmann::json runs_json(const DegreeSequence& seq) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : seq.entries) arr.push_back({e.degree, e.count});
  return arr;
}

inline nlohmann::json component_json(const Component& comp,
                                     const std::optional<ClassifiedComponent>& cls) {
  nlohmann::json j;
  if (const auto* s = std::get_if<SplitComponent>(&comp)) {
    j["k_part"] = runs_json(s->pseq.k_part);
    j["s_part"] = runs_json(s->pseq.s_part);
  } else {
    // Unpaired remainder: an empty clique part composes as plain disjoint
    // union, so this encoding round-trips.
    j["k_part"] = nlohmann::json::array();
    j["s_part"] = runs_json(std::get<TailComponent>(comp).seq);
  }
  j["kind"] = cls ? kind_name(cls->kind) : "unknown";
  j["relative"] = cls ? to_string(cls->relative) : "identity";
  j["dist"] = cls ? cls->dist : 0;
  return j;
}

inline nlohmann::json report_json(const DecompositionResult& compact,
                                  const std::optional<UnigraphReport>& report) {
  nlohmann::json j;
  j["components"] = nlohmann::json::array();
  for (std::size_t i = 0; i < compact.components.size(); ++i) {
    std::optional<ClassifiedComponent> cls;
    if (report) cls = report->components[i];
    j["components"].push_back(component_json(compact.components[i], cls));
  }
  j["dist"] = report ? report->dist : 0;
  j["unigraph"] = report.has_value();
  return j;
}

/// Treats a paired input as one compact component (a split family or a
/// complete/isolated block).
inline std::optional<UnigraphReport> single_component_report(const PairedDegreeSequence& pseq) {
  auto cls = classify_component(SplitComponent{pseq});
  if (!cls) return std::nullopt;
  UnigraphReport report;
  report.dist = cls->dist;
  report.components.push_back(std::move(*cls));
  return report;
}

struct PipelineOutput {
  DecompositionResult canonical;  // empty for paired single-component input
  DecompositionResult compact;
  std::optional<UnigraphReport> report;
};

inline PipelineOutput run_pipeline(const ParsedSequence& parsed) {
  PipelineOutput out;
  if (const auto* pseq = std::get_if<PairedDegreeSequence>(&parsed)) {
    out.report = single_component_report(*pseq);
    out.compact.compact = true;
    out.compact.components.push_back(SplitComponent{*pseq});
    return out;
  }
  const auto& seq = std::get<DegreeSequence>(parsed);
  out.canonical = decompose(seq);
  out.compact = decompose_compact(out.canonical);
  out.report = find_dist_unigraph(seq);
  return out;
}

inline int cmd_dist(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const PipelineOutput result = run_pipeline(load_sequence(cfg, in));
  if (cfg.json) {
    out << report_json(result.compact, result.report).dump() << "\n";
    return result.report ? exit_ok : exit_not_unigraph;
  }
  if (!result.report) {
    out << "not a unigraph\n";
    return exit_not_unigraph;
  }
  out << result.report->dist << "\n";
  return exit_ok;
}

inline int cmd_decompose(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  ParsedSequence parsed = load_sequence(cfg, in);
  if (const auto* pseq = std::get_if<PairedDegreeSequence>(&parsed))
    parsed = flatten(*pseq);
  const PipelineOutput result = run_pipeline(parsed);
  if (cfg.json) {
    out << report_json(result.compact, result.report).dump() << "\n";
    return exit_ok;
  }
  if (!cfg.compact_only) {
    out << "canonical components (leftmost first):\n";
    for (const auto& c : result.canonical.components) out << "  " << format_component(c) << "\n";
  }
  out << "compact components (leftmost first):\n";
  for (const auto& c : result.compact.components) out << "  " << format_component(c) << "\n";
  if (result.report)
    out << "dist: " << result.report->dist << "\n";
  else
    out << "dist: not a unigraph\n";
  return exit_ok;
}

inline int cmd_classify(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const PipelineOutput result = run_pipeline(load_sequence(cfg, in));
  if (cfg.json) {
    out << report_json(result.compact, result.report).dump() << "\n";
    return result.report ? exit_ok : exit_not_unigraph;
  }
  if (!result.report) {
    out << "not a unigraph\n";
    return exit_not_unigraph;
  }
  out << "components (leftmost first):\n";
  for (std::size_t i = 0; i < result.report->components.size(); ++i) {
    const auto& cls = result.report->components[i];
    out << "  " << i + 1 << ": " << format_component(result.compact.components[i]) << "  "
        << describe(cls.kind) << "  " << to_string(cls.relative) << "  dist " << cls.dist << "\n";
  }
  out << "dist: " << result.report->dist << "\n";
  return exit_ok;
}

inline u64 param_at(const CliConfig& cfg, std::size_t i, const char* name) {
  if (i >= cfg.params.size())
    throw std::invalid_argument(std::string("gen: missing parameter ") + name);
  return cfg.params[i];
}

inline int cmd_gen(const CliConfig& cfg, std::ostream& out) {
  const std::string& f = cfg.family;
  Graph g;
  if (f == "c5") {
    g = make_family(C5Kind{});
  } else if (f == "mk2") {
    g = make_family(MK2Kind{param_at(cfg, 0, "m")});
  } else if (f == "u2") {
    g = make_family(U2Kind{param_at(cfg, 0, "m"), param_at(cfg, 1, "l")});
  } else if (f == "u3") {
    g = make_family(U3Kind{param_at(cfg, 0, "m")});
  } else if (f == "s") {
    g = make_family(SKind{param_at(cfg, 0, "p"), param_at(cfg, 1, "q")});
  } else if (f == "s2") {
    if (cfg.params.size() < 4 || cfg.params.size() % 2 != 0)
      throw std::invalid_argument("gen s2: need p1 q1 p2 q2 ...");
    S2Kind kind;
    for (std::size_t i = 0; i < cfg.params.size(); i += 2)
      kind.pairs.emplace_back(cfg.params[i], cfg.params[i + 1]);
    g = make_family(kind);
  } else if (f == "s3") {
    g = make_family(S3Kind{param_at(cfg, 0, "p"), param_at(cfg, 1, "q1"), param_at(cfg, 2, "q2")});
  } else if (f == "s4") {
    g = make_family(S4Kind{param_at(cfg, 0, "p"), param_at(cfg, 1, "q")});
  } else if (f == "complete") {
    g = make_family(CompleteKind{param_at(cfg, 0, "n")});
  } else if (f == "isolated") {
    g = make_family(IsolatedKind{param_at(cfg, 0, "n")});
  } else if (f == "random") {
    const u64 comps = cfg.params.size() > 0 ? cfg.params[0] : 3;
    const u64 size = cfg.params.size() > 1 ? cfg.params[1] : 9;
    g = random_unigraph(cfg.seed, comps, size);
  } else if (f == "threshold") {
    g = random_threshold(cfg.seed, param_at(cfg, 0, "n"));
  } else {
    throw std::invalid_argument("gen: unknown family '" + f + "'");
  }
  out << format_edge_list(g);
  return exit_ok;
}

inline int cmd_oracle(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const std::string& action = cfg.oracle_action;
  if (action == "iso") {
    if (!cfg.edges_path || !cfg.edges2_path)
      throw std::invalid_argument("oracle iso: need --edges and --edges2");
    const Graph g = parse_edge_list(read_source(*cfg.edges_path, in));
    const Graph h = parse_edge_list(read_source(*cfg.edges2_path, in));
    out << (brute_isomorphic(g, h, cfg.cap) ? "isomorphic" : "not isomorphic") << "\n";
    return exit_ok;
  }
  const Graph g = load_graph(cfg, in);
  if (action == "aut") {
    out << automorphism_count(g, cfg.cap) << "\n";
  } else if (action == "dist") {
    out << brute_dist_number(g, cfg.cap) << "\n";
  } else if (action == "count") {
    if (cfg.colors == 0) throw std::invalid_argument("oracle count: need --colors");
    out << count_inequivalent(g, cfg.colors, cfg.cap) << "\n";
  } else if (action == "split") {
    if (auto w = brute_is_split(g, cfg.cap)) {
      out << "split\n";
      out << "clique:";
      for (u64 v : w->a_set) out << " " << v;
      out << "\nstable:";
      for (u64 v : w->b_set) out << " " << v;
      out << "\n";
    } else {
      out << "not split\n";
    }
  } else {
    throw std::invalid_argument("oracle: unknown action '" + action + "'");
  }
  return exit_ok;
}

inline int cmd_bench(const CliConfig& cfg, std::ostream& out) {
  if (cfg.sizes.empty()) throw std::invalid_argument("bench: need --sizes");
  for (u64 n : cfg.sizes) {
    const DegreeSequence seq = threshold_degree_sequence(cfg.seed, n);
    double best_ms = 1e300;
    u64 dist = 0;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const auto report = find_dist_unigraph(seq);
      const auto stop = std::chrono::steady_clock::now();
      if (!report) throw std::logic_error("bench: threshold sequence not recognized");
      dist = report->dist;
      best_ms = std::min(best_ms, std::chrono::duration<double, std::milli>(stop - start).count());
    }
    out << "n=" << n << " dist=" << dist << " time_ms=" << best_ms << "\n";
  }
  return exit_ok;
}

}  // namespace detail

/// Executes one parsed command. Exit codes: 0 success, 1 not a unigraph,
/// 2 malformed input, 3 oracle cap exceeded.
inline int run(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "dist") return detail::cmd_dist(cfg, in, out);
    if (cfg.command == "decompose") return detail::cmd_decompose(cfg, in, out);
    if (cfg.command == "classify") return detail::cmd_classify(cfg, in, out);
    if (cfg.command == "gen") return detail::cmd_gen(cfg, out);
    if (cfg.command == "oracle") return detail::cmd_oracle(cfg, in, out);
    if (cfg.command == "bench") return detail::cmd_bench(cfg, out);
    err << "unknown command: " << cfg.command << "\n";
    return exit_bad_input;
  } catch (const too_large_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_too_large;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_input;
  }
}

}  // namespace unidist::cli
