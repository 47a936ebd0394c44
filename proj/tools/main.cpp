#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "critbound/errors.hpp"

using namespace critbound;
using namespace critbound::cli;

namespace {

struct GraphInput {
  std::string graph6;
  std::string file;

  Graph load() const {
    if (!graph6.empty()) return parse_graph6(graph6);
    std::stringstream ss;
    if (!file.empty() && file != "-") {
      std::ifstream in(file);
      if (!in) throw PreconditionError("cannot open " + file);
      ss << in.rdbuf();
    } else {
      ss << std::cin.rdbuf();
    }
    return parse_graph(ss.str());
  }
};

void graph_options(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("-g,--graph", in.graph6, "graph in graph6 form");
  cmd->add_option("--file", in.file, "edge-list or graph6 file ('-' or omitted: stdin)");
}

int emit_error(const std::string& command, const std::string& kind, const std::string& what, int code) {
  Json doc = {{"command", command}, {"error", kind}, {"message", what}};
  if (code == kBudget) doc["budget"] = {{"status", "exceeded"}};
  std::cout << doc.dump(2) << "\n";
  std::cerr << "critbound " << command << ": " << what << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Average-degree bounds for critical graphs: structure, coloring engines, discharging"};
  app.require_subcommand(1);
  app.fallthrough();

  BudgetFlags flags;
  app.add_option("--max-vertices", flags.max_vertices, "vertex cap for exhaustive searches");
  app.add_option("--max-edges", flags.max_edges, "edge cap for exhaustive searches");
  app.add_option("--max-states", flags.max_states, "state cap for exhaustive searches");

  GraphInput input;
  std::optional<int> k_opt;
  int k = 0, m = 1, n_max = 8;
  std::string preset = "smallP", mode = "auto", notion = "chromatic", family, f_spec, format = "json",
              lemma = "auto";
  std::vector<int> ks{4, 5, 6, 7, 8, 9, 10, 15, 20}, y;
  std::optional<int> x;

  auto* analyze = app.add_subcommand("analyze", "blocks, Gallai-tree membership, W^k, q, auxiliary graph");
  graph_options(analyze, input);
  analyze->add_option("-k", k_opt, "color parameter");

  auto* bounds = app.add_subcommand("bounds", "bound table, parameter hypotheses and main bounds");
  bounds->add_option("-k", ks, "values of k")->delimiter(',');
  bounds->add_option("--preset", preset, "gallai, ks or smallP");
  bounds->add_option("--format", format, "json or csv");

  auto* verify = app.add_subcommand("verify-trees", "check the Gallai-tree edge bounds exhaustively");
  verify->add_option("-k", k, "color parameter")->required();
  verify->add_option("--n-max", n_max, "largest tree order (<= 10)");

  auto* construct = app.add_subcommand("construct", "build an extremal construction");
  construct->add_option("--family", family, "extremal-chain or clique-path")->required();
  construct->add_option("-k", k, "color parameter")->required();
  construct->add_option("-m", m, "number of copies");

  auto* at = app.add_subcommand("at", "decide f-AT and print a certificate orientation");
  auto* choose = app.add_subcommand("choose", "decide f-choosability");
  auto* paint = app.add_subcommand("paint", "decide f-paintability");
  for (auto* cmd : {at, choose, paint}) {
    graph_options(cmd, input);
    cmd->add_option("-f", f_spec, "constant, comma list, 'd' or 'd-1'")->required();
  }

  auto* chi = app.add_subcommand("chi", "chromatic number");
  graph_options(chi, input);

  auto* critical = app.add_subcommand("critical", "decide k-criticality");
  graph_options(critical, input);
  critical->add_option("-k", k, "color parameter")->required();
  critical->add_option("--notion", notion, "chromatic, list, paint or at");

  auto* discharge = app.add_subcommand("discharge", "run a discharging procedure and print the ledger");
  graph_options(discharge, input);
  discharge->add_option("-k", k, "color parameter")->required();
  discharge->add_option("--preset", preset, "gallai, ks or smallP");
  discharge->add_option("--mode", mode, "auto, symmetric, lopsided or gallai");

  auto* reduce = app.add_subcommand("reduce-check", "check a reducible-configuration hypothesis set");
  graph_options(reduce, input);
  reduce->add_option("-k", k, "color parameter")->required();
  reduce->add_option("-x", x, "the high vertex (single check)");
  reduce->add_option("-y", y, "high vertex set (multiple checks)")->delimiter(',');
  reduce->add_option("--check", lemma, "auto, single, symmetric or lopsided");

  auto* census = app.add_subcommand("census", "minimum edge counts of critical graphs in a graph6 stream");
  census->add_option("-k", k, "color parameter")->required();
  census->add_option("--notion", notion, "chromatic, list, paint or at");
  census->add_option("--file", input.file, "graph6 stream ('-' or omitted: stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Result r;
    if (*analyze) r = cli::analyze(input.load(), k_opt);
    if (*bounds) r = cli::bounds(ks, preset, format);
    if (*verify) r = cli::verify_trees(k, n_max);
    if (*construct) r = cli::construct(family, k, m);
    if (*at) r = cli::at(input.load(), f_spec, flags);
    if (*choose) r = cli::choose(input.load(), f_spec, flags);
    if (*paint) r = cli::paint(input.load(), f_spec, flags);
    if (*chi) r = cli::chi(input.load(), flags);
    if (*critical) r = cli::critical(input.load(), k, notion, flags);
    if (*discharge) r = cli::discharge(input.load(), k, preset, mode);
    if (*reduce) r = cli::reduce_check(input.load(), k, x, y, lemma, flags);
    if (*census) {
      if (!input.file.empty() && input.file != "-") {
        std::ifstream in(input.file);
        if (!in) throw PreconditionError("cannot open " + input.file);
        r = cli::census(in, k, notion, flags);
      } else {
        r = cli::census(std::cin, k, notion, flags);
      }
    }
    if (!r.text.empty()) {
      std::cout << r.text;
    } else {
      std::cout << r.doc.dump(2) << "\n";
    }
    return r.exit;
  } catch (const BudgetExceeded& e) {
    return emit_error(command, "budget exceeded", e.what(), kBudget);
  } catch (const CorrectnessFinding& e) {
    return emit_error(command, "correctness finding", e.what(), kFalsified);
  } catch (const Error& e) {
    return emit_error(command, "input error", e.what(), kInputError);
  }
}
