#include "critbound/structure.hpp"

#include <algorithm>
#include <functional>

#include "critbound/errors.hpp"

namespace critbound {

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<Edge> stack;
  int timer = 0;
  BlockDecomposition out;

  explicit BlockFinder(const Graph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0) {}

  void visit(Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (disc[w] < 0) {
        ++children;
        stack.push_back({v, w});
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent >= 0 || children > 1) out.cut_vertices.insert(v);
          VertexSet block;
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block.insert(e.u);
            block.insert(e.v);
            if (e.u == v && e.v == w) break;
          }
          out.blocks.push_back(block);
        }
      } else if (w != parent && disc[w] < disc[v]) {
        stack.push_back({v, w});
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

int edges_within(const Graph& g, VertexSet s) {
  int twice = 0;
  for (Vertex v : s) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("block decomposition needs a connected graph; split components first");
  }
  if (g.order() == 1) {
    BlockDecomposition single;
    single.blocks.push_back(VertexSet::single(0));
    return single;
  }
  BlockFinder finder(g);
  finder.visit(0, -1);
  BlockDecomposition out = std::move(finder.out);
  std::sort(out.blocks.begin(), out.blocks.end());
  for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b) {
    for (Vertex c : out.blocks[b] & out.cut_vertices) out.tree_edges.emplace_back(b, c);
  }
  return out;
}

bool is_gallai_tree(const Graph& g) {
  if (!is_connected(g)) return false;
  for (const VertexSet& block : block_decomposition(g).blocks) {
    const int s = block.size();
    const int e = edges_within(g, block);
    const bool clique = e == s * (s - 1) / 2;
    const bool odd_cycle = s >= 3 && s % 2 == 1 && e == s;
    if (!clique && !odd_cycle) return false;
  }
  return true;
}

bool in_T_k(const Graph& g, int k) {
  if (g.max_degree() > k - 1) return false;
  if (g.order() == k && is_complete(g)) return false;
  return is_gallai_tree(g);
}

VertexSet w_k(const Graph& g, int k) {
  if (k < 2) throw PreconditionError("W^k needs k >= 2");
  VertexSet w;
  const int t = k - 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (w.contains(v) || g.degree(v) < t - 1) continue;
    if (t == 1) {
      w.insert(v);
      continue;
    }
    const InducedSubgraph nb = induced_subgraph(g, g.neighbors(v));
    if (auto clique = find_clique(nb.graph, t - 1)) {
      w.insert(v);
      for (Vertex u : *clique) w.insert(nb.to_original[u]);
    }
  }
  return w;
}

int q_value(const Graph& g, int k) {
  const BlockDecomposition blocks = block_decomposition(g);
  return (w_k(g, k) - blocks.cut_vertices).size();
}

LowHighSplit low_high_split(const Graph& g, int k) {
  LowHighSplit out;
  VertexSet low_vertices;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d < k - 1) {
      out.deficient.insert(v);
    } else if (d == k - 1) {
      low_vertices.insert(v);
    } else if (d == k) {
      out.high.insert(v);
    } else {
      out.higher.insert(v);
    }
  }
  for (const VertexSet& comp : components(g, low_vertices)) {
    LowComponent lc{comp, induced_subgraph(g, comp), VertexSet()};
    for (Vertex u : w_k(lc.graph.graph, k)) lc.w.insert(lc.graph.to_original[u]);
    out.low.push_back(std::move(lc));
  }
  return out;
}

int AuxiliaryBipartite::tree_degree(int t) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                        [t](const auto& e) { return e.second == t; }));
}

int AuxiliaryBipartite::high_degree(Vertex y) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                        [y](const auto& e) { return e.first == y; }));
}

namespace {

AuxiliaryBipartite connect(const Graph& g, VertexSet high, std::vector<VertexSet> trees,
                           std::vector<VertexSet> tree_w) {
  AuxiliaryBipartite aux{std::move(trees), std::move(tree_w), high, {}};
  for (Vertex y : high) {
    for (int t = 0; t < static_cast<int>(aux.trees.size()); ++t) {
      if (!(g.neighbors(y) & aux.tree_w[t]).empty()) aux.edges.emplace_back(y, t);
    }
  }
  return aux;
}

}  // namespace

AuxiliaryBipartite build_auxiliary(const Graph& g, int k) {
  const LowHighSplit split = low_high_split(g, k);
  std::vector<VertexSet> trees, tree_w;
  for (const LowComponent& lc : split.low) {
    trees.push_back(lc.vertices);
    tree_w.push_back(lc.w);
  }
  return connect(g, split.high, std::move(trees), std::move(tree_w));
}

AuxiliaryBipartite build_auxiliary(const Graph& g, VertexSet y_side, int k) {
  std::vector<VertexSet> trees, tree_w;
  for (const VertexSet& comp : components(g, g.vertices() - y_side)) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    VertexSet w;
    for (Vertex u : w_k(sub.graph, k)) w.insert(sub.to_original[u]);
    trees.push_back(comp);
    tree_w.push_back(w);
  }
  return connect(g, y_side, std::move(trees), std::move(tree_w));
}

EliminationResult eliminate(const AuxiliaryBipartite& aux, EliminationMode mode) {
  const int tree_cap = mode == EliminationMode::Symmetric ? 2 : 1;
  const int high_cap = mode == EliminationMode::Symmetric ? 2 : 3;

  std::vector<bool> tree_alive(aux.trees.size(), true);
  VertexSet high_alive = aux.high_side;
  auto live_edges = [&]() {
    std::vector<std::pair<Vertex, int>> live;
    for (const auto& e : aux.edges) {
      if (high_alive.contains(e.first) && tree_alive[e.second]) live.push_back(e);
    }
    return live;
  };

  EliminationResult result;
  for (int pass = 0;; ++pass) {
    const bool trees_left = std::find(tree_alive.begin(), tree_alive.end(), true) != tree_alive.end();
    if (!trees_left && high_alive.empty()) {
      result.success = true;
      return result;
    }
    bool progressed = false;

    std::vector<int> tree_deg(aux.trees.size(), 0);
    for (const auto& e : live_edges()) ++tree_deg[e.second];
    for (int t = 0; t < static_cast<int>(aux.trees.size()); ++t) {
      if (tree_alive[t] && tree_deg[t] <= tree_cap) {
        tree_alive[t] = false;
        result.order.push_back({EliminationStep::Side::Tree, t, pass});
        progressed = true;
      }
    }

    std::vector<int> high_deg(kMaxVertices, 0);
    for (const auto& e : live_edges()) ++high_deg[e.first];
    for (Vertex y : high_alive) {
      if (high_deg[y] <= high_cap) {
        high_alive.erase(y);
        result.order.push_back({EliminationStep::Side::High, y, pass});
        progressed = true;
      }
    }

    if (!progressed) {
      for (int t = 0; t < static_cast<int>(aux.trees.size()); ++t) {
        if (tree_alive[t]) result.residual_trees.push_back(t);
      }
      result.residual_high = high_alive;
      result.residual_edges = live_edges();
      return result;
    }
  }
}

}  // namespace critbound
