#pragma once

#include <functional>
#include <vector>

#include "critbound/graph.hpp"

namespace critbound {

inline constexpr int kMaxEnumerationOrder = 10;

/// Every graph in T_k (Gallai trees with max degree <= k-1, other than
/// K_k) on at most n_max vertices, exactly once up to isomorphism, in
/// increasing order. Built by attaching end blocks (cliques K_2..K_{k-1},
/// odd cycles C_5, C_7, ...) at single vertices.
std::vector<Graph> enumerate_gallai_trees(int k, int n_max);
void for_each_gallai_tree(int k, int n_max, const std::function<void(const Graph&)>& visit);

/// m copies of X chained through their K_{k-1} blocks, where X is a
/// K_{k-1} with k-3 pendant edges each ending in a K_{k-2}. Each copy is
/// laid out as its K_{k-1} (local 0..k-2) followed by the pendant
/// cliques; pendants hang off local vertices 2..k-2 and links use the
/// lowest free K_{k-1} vertices.
Graph extremal_chain(int k, int m);

/// m copies of K_{k-1}, consecutive copies joined by one edge.
Graph clique_path(int k, int m);

}  // namespace critbound
