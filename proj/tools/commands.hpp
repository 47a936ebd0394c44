#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "critbound/coloring.hpp"
#include "critbound/graph.hpp"

namespace critbound::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kVerified = 0, kFalsified = 1, kBudget = 2, kInputError = 3 };

struct Result {
  Json doc;
  std::string text;  // printed instead of the JSON when nonempty
  int exit = kVerified;
};

/// Command-line overrides applied on top of each engine's default budget.
struct BudgetFlags {
  std::optional<int> max_vertices;
  std::optional<int> max_edges;
  std::optional<long long> max_states;

  SearchBudget apply(SearchBudget base) const;
};

/// "3" (constant), "2,3,3" (per vertex), "d" (degree) or "d-1".
FVector parse_f(const Graph& g, const std::string& spec);

Result analyze(const Graph& g, std::optional<int> k);
Result bounds(const std::vector<int>& ks, const std::string& preset, const std::string& format);
Result verify_trees(int k, int n_max);
Result construct(const std::string& family, int k, int m);
Result at(const Graph& g, const std::string& f, const BudgetFlags& flags);
Result choose(const Graph& g, const std::string& f, const BudgetFlags& flags);
Result paint(const Graph& g, const std::string& f, const BudgetFlags& flags);
Result chi(const Graph& g, const BudgetFlags& flags);
Result critical(const Graph& g, int k, const std::string& notion, const BudgetFlags& flags);
Result discharge(const Graph& g, int k, const std::string& preset, const std::string& mode);
Result reduce_check(const Graph& g, int k, std::optional<int> x, const std::vector<int>& y,
                    const std::string& lemma, const BudgetFlags& flags);
Result census(std::istream& in, int k, const std::string& notion, const BudgetFlags& flags);

/// Graph as graph6 when it fits, otherwise as an edge list.
std::string graph_text(const Graph& g);

}  // namespace critbound::cli
