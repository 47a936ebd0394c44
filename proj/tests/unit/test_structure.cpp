#include <doctest.h>

#include <random>

#include "critbound/errors.hpp"
#include "critbound/generators.hpp"
#include "critbound/structure.hpp"
#include "test_support.hpp"

using namespace critbound;
namespace t = critbound::testing;

namespace {

Graph figure1() { return parse_edge_list(t::read_fixture("figure1.edges")); }

int brute_edges_within(const Graph& g, VertexSet s) {
  int count = 0;
  for (const Edge& e : g.edges()) count += s.contains(e.u) && s.contains(e.v);
  return count;
}

bool brute_gallai(const Graph& g) {
  if (!t::brute_connected(g, g.vertices())) return false;
  for (VertexSet b : t::brute_blocks(g)) {
    const int s = b.size();
    const int e = brute_edges_within(g, b);
    if (e != s * (s - 1) / 2 && !(s % 2 == 1 && e == s)) return false;
  }
  return true;
}

// Peel nodes of degree <= 2 one at a time, in any order.
bool two_degenerate(const AuxiliaryBipartite& aux) {
  std::vector<bool> tree(aux.trees.size(), true);
  VertexSet high = aux.high_side;
  while (true) {
    bool removed = false;
    for (std::size_t i = 0; i < tree.size() && !removed; ++i) {
      if (!tree[i]) continue;
      int d = 0;
      for (auto [y, tr] : aux.edges) d += tr == static_cast<int>(i) && high.contains(y);
      if (d <= 2) tree[i] = false, removed = true;
    }
    for (Vertex y : high) {
      if (removed) break;
      int d = 0;
      for (auto [yy, tr] : aux.edges) d += yy == y && tree[tr];
      if (d <= 2) high.erase(y), removed = true;
    }
    if (!removed) break;
  }
  return high.empty() && std::find(tree.begin(), tree.end(), true) == tree.end();
}

AuxiliaryBipartite random_aux(std::mt19937& rng, int trees, int highs, double density) {
  AuxiliaryBipartite aux;
  aux.trees.resize(trees);
  aux.tree_w.resize(trees);
  aux.high_side = VertexSet::range(highs);
  std::bernoulli_distribution coin(density);
  for (Vertex y = 0; y < highs; ++y) {
    for (int tr = 0; tr < trees; ++tr) {
      if (coin(rng)) aux.edges.emplace_back(y, tr);
    }
  }
  return aux;
}

}  // namespace

TEST_CASE("blocks of small graphs") {
  const BlockDecomposition p3 = block_decomposition(path_graph(3));
  CHECK(p3.blocks == std::vector<VertexSet>{VertexSet::of({0, 1}), VertexSet::of({1, 2})});
  CHECK(p3.cut_vertices == VertexSet::of({1}));

  const BlockDecomposition k4 = block_decomposition(complete_graph(4));
  CHECK(k4.blocks.size() == 1);
  CHECK(k4.cut_vertices.empty());

  CHECK(block_decomposition(Graph(1)).blocks.size() == 1);
  CHECK_THROWS_AS(block_decomposition(Graph(2)), PreconditionError);
  CHECK_THROWS_AS(block_decomposition(Graph(0)), PreconditionError);
}

TEST_CASE("figure 1 block structure") {
  const Graph g = figure1();
  const BlockDecomposition d = block_decomposition(g);
  CHECK(d.blocks.size() == 11);
  CHECK(d.cut_vertices.size() == 10);
  CHECK(d.cut_vertices == t::brute_cut_vertices(g));
  CHECK(d.blocks == t::brute_blocks(g));
  int k4 = 0, k3 = 0, k2 = 0;
  for (VertexSet b : d.blocks) {
    k4 += b.size() == 4;
    k3 += b.size() == 3;
    k2 += b.size() == 2;
  }
  CHECK(k4 == 2);
  CHECK(k3 == 4);
  CHECK(k2 == 5);
  CHECK(is_gallai_tree(g));
  CHECK(in_T_k(g, 5));
  CHECK(g.max_degree() == 4);
  CHECK(w_k(g, 5).size() == 8);
  CHECK(q_value(g, 5) == 2);
}

TEST_CASE("blocks agree with brute force on connected graphs") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : t::connected_graphs(n)) {
      const BlockDecomposition d = block_decomposition(g);
      REQUIRE(d.blocks == t::brute_blocks(g));
      REQUIRE(d.cut_vertices == t::brute_cut_vertices(g));
      for (const Edge& e : g.edges()) {
        int holders = 0;
        for (VertexSet b : d.blocks) holders += b.contains(e.u) && b.contains(e.v);
        REQUIRE(holders == 1);
      }
      for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
          const VertexSet shared = d.blocks[i] & d.blocks[j];
          REQUIRE(shared.size() <= 1);
          REQUIRE(shared.is_subset_of(d.cut_vertices));
        }
      }
      // block-cut tree: connected and acyclic means nodes - 1 edges
      REQUIRE(d.tree_edges.size() + 1 == d.blocks.size() + d.cut_vertices.size());
    }
  }
  // sampled graphs on 7..9 vertices
  std::mt19937 rng(7);
  int sampled = 0;
  while (sampled < 300) {
    const int n = 7 + sampled % 3;
    std::bernoulli_distribution coin(0.3);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    if (!is_connected(g)) continue;
    ++sampled;
    const BlockDecomposition d = block_decomposition(g);
    REQUIRE(d.blocks == t::brute_blocks(g));
    REQUIRE(d.cut_vertices == t::brute_cut_vertices(g));
  }
}

TEST_CASE("Gallai trees") {
  CHECK_FALSE(is_gallai_tree(cycle_graph(4)));
  CHECK(is_gallai_tree(complete_graph(4)));
  CHECK(is_gallai_tree(cycle_graph(5)));
  CHECK(is_gallai_tree(star_graph(4)));
  CHECK(is_gallai_tree(Graph(1)));
  CHECK_FALSE(is_gallai_tree(Graph(2)));
  CHECK_FALSE(in_T_k(complete_graph(5), 5));
  CHECK(in_T_k(complete_graph(4), 5));
  CHECK_FALSE(in_T_k(star_graph(5), 5));

  for (int n = 1; n <= 8; ++n) {
    if (n <= 6) {
      for (const Graph& g : t::connected_graphs(n)) REQUIRE(is_gallai_tree(g) == brute_gallai(g));
    } else {
      std::mt19937 rng(n);
      for (int i = 0; i < 400; ++i) {
        Graph g(n);
        std::bernoulli_distribution coin(0.25 + 0.05 * (i % 5));
        for (Vertex u = 0; u < n; ++u) {
          for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
          }
        }
        if (!is_connected(g)) continue;
        REQUIRE(is_gallai_tree(g) == brute_gallai(g));
      }
    }
  }
}

TEST_CASE("W^k and q") {
  CHECK(w_k(complete_graph(4), 5) == VertexSet::range(4));
  CHECK(w_k(cycle_graph(5), 5).empty());
  CHECK(q_value(complete_graph(4), 5) == 4);
  CHECK_THROWS_AS(q_value(Graph(3), 5), PreconditionError);
  for (int k = 5; k <= 7; ++k) {
    for (int m = 1; m <= 4; ++m) {
      const Graph g = extremal_chain(k, m);
      const VertexSet w = w_k(g, k);
      const int copy = (k - 1) + (k - 3) * (k - 2);
      VertexSet expected;
      for (int c = 0; c < m; ++c) {
        for (int i = 0; i < k - 1; ++i) expected.insert(c * copy + i);
      }
      CHECK(w == expected);
      CHECK(q_value(g, k) == 2);
      CHECK(q_value(g, k) <= static_cast<int>(w.size()));
    }
  }
}

TEST_CASE("low/high split") {
  const LowHighSplit wheel = low_high_split(wheel_graph(5), 4);
  REQUIRE(wheel.low.size() == 1);
  CHECK(wheel.low[0].vertices == VertexSet::range(6) - VertexSet::single(0));
  CHECK(are_isomorphic(wheel.low[0].graph.graph, cycle_graph(5)));
  CHECK(wheel.high.empty());
  CHECK(wheel.higher == VertexSet::single(0));
  CHECK(wheel.deficient.empty());

  Graph k5e = complete_graph(5);
  k5e.remove_edge(0, 1);
  const LowHighSplit s = low_high_split(k5e, 5);
  CHECK(s.deficient == VertexSet::of({0, 1}));

  const LowHighSplit reg = low_high_split(cycle_graph(6), 3);
  REQUIRE(reg.low.size() == 1);
  CHECK(reg.low[0].vertices == VertexSet::range(6));
  CHECK(reg.high.empty());
  CHECK(reg.higher.empty());
}

TEST_CASE("auxiliary bipartite graph") {
  const AuxiliaryBipartite wheel = build_auxiliary(wheel_graph(5), 4);
  CHECK(wheel.trees.size() == 1);
  CHECK(wheel.edges.empty());

  Graph g(5);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) g.add_edge(u, v);
  }
  g.add_edge(4, 0);
  g.add_edge(4, 1);
  const AuxiliaryBipartite small = build_auxiliary(g, 5);
  CHECK_FALSE(small.high_side.contains(4));
  CHECK(small.edges.empty());

  // K_6 on 0..5, y = 6, pad clique K_8 on 7..14; k = 7
  Graph s(15);
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) s.add_edge(u, v);
  }
  for (Vertex u = 7; u < 15; ++u) {
    for (Vertex v = u + 1; v < 15; ++v) s.add_edge(u, v);
  }
  for (Vertex u = 0; u < 3; ++u) s.add_edge(6, u);
  for (Vertex p = 7; p < 11; ++p) s.add_edge(6, p);
  for (Vertex u = 3; u < 6; ++u) s.add_edge(u, u + 8);
  REQUIRE(s.degree(6) == 7);
  const AuxiliaryBipartite aux = build_auxiliary(s, 7);
  REQUIRE(aux.trees.size() == 1);
  CHECK(aux.trees[0] == VertexSet::range(6));
  CHECK(aux.tree_w[0] == VertexSet::range(6));
  CHECK(aux.edges == std::vector<std::pair<Vertex, int>>{{6, 0}});
  CHECK(aux.tree_degree(0) == 1);
  CHECK(aux.high_degree(6) == 1);
}

TEST_CASE("elimination") {
  AuxiliaryBipartite empty;
  const EliminationResult e = eliminate(empty, EliminationMode::Symmetric);
  CHECK(e.success);
  CHECK(e.order.empty());

  AuxiliaryBipartite single;
  single.trees = {VertexSet::of({1})};
  single.tree_w = {VertexSet::of({1})};
  single.high_side = VertexSet::single(0);
  single.edges = {{0, 0}};
  for (auto mode : {EliminationMode::Symmetric, EliminationMode::Lopsided}) {
    const EliminationResult r = eliminate(single, mode);
    CHECK(r.success);
    REQUIRE(r.order.size() == 2);
    CHECK(r.order[0] == EliminationStep{EliminationStep::Side::Tree, 0, 0});
    CHECK(r.order[1] == EliminationStep{EliminationStep::Side::High, 0, 0});
  }

  std::mt19937 rng(3);
  AuxiliaryBipartite k33 = random_aux(rng, 3, 3, 1.0);
  const EliminationResult fail = eliminate(k33, EliminationMode::Symmetric);
  CHECK_FALSE(fail.success);
  CHECK(fail.order.empty());
  CHECK(fail.residual_trees == std::vector<int>{0, 1, 2});
  CHECK(fail.residual_high == VertexSet::range(3));
  CHECK(fail.residual_edges.size() == 9);
  // lopsided: trees still have degree 3 > 1 but highs have degree 3 <= 3
  CHECK(eliminate(k33, EliminationMode::Lopsided).success);

  for (int i = 0; i < 500; ++i) {
    const AuxiliaryBipartite aux = random_aux(rng, 1 + i % 6, 1 + (i / 6) % 6, 0.3 + 0.1 * (i % 5));
    const EliminationResult r = eliminate(aux, EliminationMode::Symmetric);
    REQUIRE(r.success == two_degenerate(aux));
    if (r.success) {
      REQUIRE(r.order.size() == aux.trees.size() + aux.high_side.size());
    } else {
      for (int tr : r.residual_trees) {
        int d = 0;
        for (auto [y, tt] : r.residual_edges) d += tt == tr;
        REQUIRE(d >= 3);
      }
    }
  }
}
