#pragma once

#include <optional>
#include <vector>

#include "critbound/graph.hpp"
#include "critbound/rational.hpp"

namespace critbound {

/// Edge bounds for one tree T in T_k:
///   2||T|| < (k-2+2/(k-1))|T|, and <= that minus 2;
///   without K_{k-1}: 2||T|| <= (k-3+3/(k-2))|T| - 3;
///   with K_{k-1}:    2||T|| <= (k-3+p)|T| + f + h q(T) for the smallP preset.
struct TreeCheck {
  int order = 0;
  int twice_edges = 0;
  int q = 0;
  bool has_big_clique = false;
  bool gallai_strict = false;
  bool gallai_refined = false;
  std::optional<bool> without_clique;
  std::optional<bool> with_clique;
  Rational slack;  // RHS - 2||T|| of whichever of the last two applies

  bool ok() const;
};

/// Requires k >= 5 and t in T_k.
TreeCheck check_tree_bounds(const Graph& t, int k);

struct TreeVerification {
  int k = 0;
  int n_max = 0;
  long long trees_checked = 0;
  std::vector<long long> per_order;  // index = vertex count
  long long tight = 0;               // zero slack
  std::vector<Graph> violators;
};

TreeVerification verify_trees(int k, int n_max);

}  // namespace critbound
