// Command-line front end for the unigraph distinguishing-number library.

#include <iostream>

#include "CLI11.hpp"
#include "unidist/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"degree-sequence decomposition, unigraph recognition and distinguishing numbers"};
  app.require_subcommand(1);

  unidist::cli::CliConfig cfg;
  std::string degseq, edges, edges2;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--degseq", degseq, "inline degree sequence, e.g. \"4^3;2,1^4\"");
    sub->add_option("--edges", edges, "edge-list file path, or - for stdin");
    sub->add_flag("--json", cfg.json, "emit JSON instead of text");
  };

  CLI::App* dist = app.add_subcommand("dist", "distinguishing number of a unigraph");
  add_input(dist);

  CLI::App* decompose = app.add_subcommand("decompose", "canonical and compact decomposition");
  add_input(decompose);
  decompose->add_flag("--compact", cfg.compact_only, "print only the compact components");

  CLI::App* classify = app.add_subcommand("classify", "per-component family, relative and dist");
  add_input(classify);

  CLI::App* gen = app.add_subcommand("gen", "emit an edge list for a family instance");
  gen->add_option("family", cfg.family,
                  "c5|mk2|u2|u3|s|s2|s3|s4|complete|isolated|random|threshold")
      ->required();
  gen->add_option("params", cfg.params, "family parameters, e.g. gen s3 1 2 1");
  gen->add_option("--seed", cfg.seed, "seed for random/threshold")->default_val(0);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force checks on small graphs");
  oracle->add_option("action", cfg.oracle_action, "aut|dist|count|split|iso")->required();
  oracle->add_option("--edges", edges, "edge-list file path, or - for stdin");
  oracle->add_option("--edges2", edges2, "second edge list (iso)");
  oracle->add_option("--colors", cfg.colors, "color count (count)");
  oracle->add_option("--cap", cfg.cap, "vertex cap for brute force")->default_val(10);

  CLI::App* bench = app.add_subcommand("bench", "time the pipeline on threshold sequences");
  bench->add_option("--sizes", cfg.sizes, "vertex counts to time")->required()->delimiter(',');
  bench->add_option("--seed", cfg.seed, "sequence seed")->default_val(0);

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  if (!degseq.empty()) cfg.degseq = degseq;
  if (!edges.empty()) cfg.edges_path = edges;
  if (!edges2.empty()) cfg.edges2_path = edges2;

  return unidist::cli::run(cfg, std::cin, std::cout, std::cerr);
}
