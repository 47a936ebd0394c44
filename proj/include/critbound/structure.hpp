#pragma once

#include <utility>
#include <vector>

#include "critbound/graph.hpp"

namespace critbound {

/// Blocks (maximal 2-connected subgraphs or bridges) of a connected graph.
/// An isolated single vertex forms one trivial block.
struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  /// Block-cut tree as (block index, cut vertex) incidences.
  std::vector<std::pair<int, Vertex>> tree_edges;
};

/// Throws PreconditionError for disconnected or empty input.
BlockDecomposition block_decomposition(const Graph& g);

bool is_gallai_tree(const Graph& g);

/// Gallai trees of maximum degree at most k-1, other than K_k.
bool in_T_k(const Graph& g, int k);

/// Vertices lying in at least one clique on k-1 vertices.
VertexSet w_k(const Graph& g, int k);

/// Non-cut vertices lying in some K_{k-1}. Requires g connected.
int q_value(const Graph& g, int k);

struct LowComponent {
  VertexSet vertices;     // original labels
  InducedSubgraph graph;  // the component, relabelled
  VertexSet w;            // W^k of the component, original labels
};

struct LowHighSplit {
  std::vector<LowComponent> low;  // components on the (k-1)-vertices
  VertexSet high;                 // degree exactly k
  VertexSet higher;               // degree at least k+1
  VertexSet deficient;            // degree below k-1; fails downstream preconditions
};

LowHighSplit low_high_split(const Graph& g, int k);

/// Bipartite incidence between "high" vertices and tree components: y is
/// adjacent to T iff y has a neighbour in W^k(T).
struct AuxiliaryBipartite {
  std::vector<VertexSet> trees;    // vertex set of each tree component
  std::vector<VertexSet> tree_w;   // W^k of each tree component
  VertexSet high_side;
  std::vector<std::pair<Vertex, int>> edges;  // (y, tree index), sorted

  int tree_degree(int t) const;
  int high_degree(Vertex y) const;
};

/// The auxiliary graph on H(G) and the components of L(G).
AuxiliaryBipartite build_auxiliary(const Graph& g, int k);
/// The general form: high side Y, tree side the components of G - Y.
AuxiliaryBipartite build_auxiliary(const Graph& g, VertexSet y_side, int k);

enum class EliminationMode { Symmetric, Lopsided };

struct EliminationStep {
  enum class Side { Tree, High };
  Side side;
  int id;    // tree index or vertex label
  int pass;  // 0-based outer iteration
  bool operator==(const EliminationStep&) const = default;
};

struct EliminationResult {
  bool success = false;
  std::vector<EliminationStep> order;
  /// Nonempty only on failure: what remains when no node is removable.
  std::vector<int> residual_trees;
  VertexSet residual_high;
  std::vector<std::pair<Vertex, int>> residual_edges;
};

/// Symmetric: remove tree nodes of degree <= 2, then high nodes of degree
/// <= 2, repeatedly. Lopsided: tree nodes of degree <= 1, high nodes of
/// degree <= 3. Within a pass, all removable tree nodes go first in
/// ascending index, then all removable high nodes in ascending label.
EliminationResult eliminate(const AuxiliaryBipartite& aux, EliminationMode mode);

}  // namespace critbound
