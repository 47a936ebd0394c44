#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critbound/coloring.hpp"
#include "critbound/graph.hpp"

namespace critbound {

/// max_vertices caps |G| for the induced-subgraph search (it visits up to
/// 2^|G| subsets); max_edges and max_states apply to each f-AT test.
inline constexpr SearchBudget kReduceBudget{16, 20, 20'000'000};

struct Hypothesis {
  int index = 0;
  std::string statement;
  bool holds = false;
};

enum class ATStatus {
  NotRun,             // some hypothesis fails
  Verified,           // an f-AT certificate was found
  NotVerifiedBudget,  // the search did not finish within budget
};
std::string status_name(ATStatus s);

struct ReducibilityReport {
  std::string lemma;
  int k = 0;
  std::vector<Hypothesis> hypotheses;
  ATStatus status = ATStatus::NotRun;
  std::string budget_note;
  std::optional<VertexSet> witness;  // vertex set of the f-AT induced subgraph
  FVector f;                         // on the witness, indexed by its induced labels
  std::optional<ATCertificate> certificate;
  long long subsets_tested = 0;
  long long subsets_skipped = 0;

  bool hypotheses_hold() const;
  std::vector<int> failed() const;
};

/// Throws CorrectnessFinding if the hypotheses hold and the search
/// completes without finding f-AT.
ReducibilityReport check_lemma51(const Graph& g, Vertex x, int k, const SearchBudget& budget = kReduceBudget);
ReducibilityReport check_lemma52(const Graph& g, VertexSet y, int k, const SearchBudget& budget = kReduceBudget);
ReducibilityReport check_lemma53(const Graph& g, VertexSet y, int k, const SearchBudget& budget = kReduceBudget);

struct Lemma51Validation {
  int k = 0;
  long long instances = 0;
  long long hypotheses_held = 0;
  long long confirmed = 0;
  long long budget_skipped = 0;
  long long counterexamples = 0;
};

/// Every G = x joined to t <= t_max trees from enumerate_gallai_trees(k,
/// tree_max), over every choice of N(x), keeping instances with at most
/// max_edges edges. Counterexamples are counted, not thrown.
Lemma51Validation validate_lemma51(int k, int tree_max, int t_max, int max_edges);

}  // namespace critbound
