#include <doctest.h>

#include <map>

#include "critbound/bounds.hpp"
#include "critbound/errors.hpp"
#include "critbound/generators.hpp"
#include "critbound/structure.hpp"
#include "critbound/tree_checks.hpp"
#include "test_support.hpp"

using namespace critbound;
namespace t = critbound::testing;

namespace {

int brute_edges_within(const Graph& g, VertexSet s) {
  int count = 0;
  for (const Edge& e : g.edges()) count += s.contains(e.u) && s.contains(e.v);
  return count;
}

bool brute_gallai(const Graph& g) {
  for (VertexSet b : t::brute_blocks(g)) {
    const int s = b.size();
    const int e = brute_edges_within(g, b);
    if (e != s * (s - 1) / 2 && !(s % 2 == 1 && e == s)) return false;
  }
  return true;
}

// Nonadjacent vertices in a Gallai tree share at most one neighbour: two
// would close a 4-cycle inside one block, which must then be a clique.
bool cheap_gallai_filter(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v) && (g.neighbors(u) & g.neighbors(v)).size() >= 2) return false;
    }
  }
  return true;
}

// Labelled Gallai trees on exactly n vertices, deduplicated.
std::vector<Graph> brute_gallai_trees(int n) {
  std::map<std::pair<int, std::vector<int>>, std::vector<Graph>> buckets;
  t::for_each_labelled_graph(n, [&](const Graph& g) {
    if (!t::brute_connected(g, g.vertices()) || !cheap_gallai_filter(g) || !brute_gallai(g)) return;
    auto& bucket = buckets[{g.edge_count(), t::degree_sequence(g)}];
    for (const Graph& r : bucket) {
      if (are_isomorphic(r, g)) return;
    }
    bucket.push_back(g);
  });
  std::vector<Graph> out;
  for (auto& [key, graphs] : buckets) out.insert(out.end(), graphs.begin(), graphs.end());
  return out;
}

bool is_k(const Graph& g, int k) { return g.order() == k && is_complete(g); }

}  // namespace

TEST_CASE("small Gallai-tree counts") {
  const auto five3 = enumerate_gallai_trees(5, 3);
  CHECK(five3.size() == 4);
  const auto five4 = enumerate_gallai_trees(5, 4);
  CHECK(five4.size() == 8);
  const auto four4 = enumerate_gallai_trees(4, 4);
  CHECK(four4.size() == 7);
  const Graph paw = [] {
    Graph g = complete_graph(3);
    Graph out(4);
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
    out.add_edge(2, 3);
    return out;
  }();
  for (const Graph& want : {complete_graph(4), path_graph(4), star_graph(3), paw}) {
    CHECK(std::any_of(five4.begin(), five4.end(), [&](const Graph& g) { return are_isomorphic(g, want); }));
  }
  CHECK_THROWS_AS(enumerate_gallai_trees(5, 11), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_gallai_trees(3, 4), PreconditionError);
}

TEST_CASE("enumeration matches the brute-force filter on <= 7 vertices") {
  std::vector<std::vector<Graph>> brute(8);
  for (int n = 1; n <= 7; ++n) brute[n] = brute_gallai_trees(n);
  for (int k = 4; k <= 7; ++k) {
    const auto trees = enumerate_gallai_trees(k, 7);
    std::vector<int> count(8, 0);
    for (const Graph& g : trees) {
      REQUIRE(in_T_k(g, k));
      ++count[g.order()];
    }
    for (int n = 1; n <= 7; ++n) {
      std::vector<Graph> expected;
      for (const Graph& g : brute[n]) {
        if (g.max_degree() <= k - 1 && !is_k(g, k)) expected.push_back(g);
      }
      CAPTURE(k);
      CAPTURE(n);
      REQUIRE(count[n] == static_cast<int>(expected.size()));
      for (const Graph& want : expected) {
        const bool found = std::any_of(trees.begin(), trees.end(), [&](const Graph& g) {
          return g.order() == n && are_isomorphic(g, want);
        });
        REQUIRE(found);
      }
    }
  }
}

TEST_CASE("enumerated trees are pairwise non-isomorphic") {
  const auto trees = enumerate_gallai_trees(6, 8);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      if (trees[i].order() != trees[j].order() || trees[i].edge_count() != trees[j].edge_count()) continue;
      REQUIRE_FALSE(are_isomorphic(trees[i], trees[j]));
    }
  }
}

TEST_CASE("extremal chain") {
  const Graph f1 = parse_edge_list(t::read_fixture("figure1.edges"));
  const Graph f2 = parse_edge_list(t::read_fixture("figure2.edges"));
  const Graph c2 = extremal_chain(5, 2);
  const Graph c3 = extremal_chain(5, 3);
  CHECK(c2.order() == 20);
  CHECK(c2.edge_count() == 29);
  CHECK(c3.order() == 30);
  CHECK(c3.edge_count() == 44);
  CHECK(are_isomorphic(c2, f1));
  CHECK(are_isomorphic(c3, f2));
  const Graph c1 = extremal_chain(5, 1);
  CHECK(c1.order() == 10);
  CHECK(c1.edge_count() == 14);
  CHECK(q_value(c1, 5) == 2);
  CHECK_THROWS_AS(extremal_chain(4, 2), PreconditionError);
  CHECK_THROWS_AS(extremal_chain(5, 0), PreconditionError);

  for (int k = 5; k <= 7; ++k) {
    const BoundParams sp = preset(Preset::SmallP, k);
    for (int m = 1; m <= 4; ++m) {
      const Graph g = extremal_chain(k, m);
      const int n = g.order();
      CHECK(n == m * ((k - 1) + (k - 3) * (k - 2)));
      CHECK(g.max_degree() == k - 1);
      CHECK(in_T_k(g, k));
      const int q = q_value(g, k);
      CHECK(q == 2);
      CHECK(Rational(2 * g.edge_count()) == tree_bound_rhs(sp, n, q));
      const Rational p_required =
          (Rational(2 * g.edge_count() - (k - 3) * n) - sp.f - 2 * sp.h) / n;
      CHECK(p_required == sp.p);
    }
  }
}

TEST_CASE("clique path") {
  const Graph p52 = clique_path(5, 2);
  CHECK(p52.order() == 8);
  CHECK(p52.edge_count() == 13);
  CHECK(Rational(2 * p52.edge_count()) == (Rational(5 - 2) + Rational(2, 5 - 1)) * 8 - 2);
  CHECK(clique_path(4, 3).order() == 9);
  CHECK(2 * clique_path(4, 3).edge_count() == 22);
  CHECK(clique_path(5, 1) == complete_graph(4));
  for (int k = 4; k <= 8; ++k) {
    for (int m = 1; m <= 5; ++m) {
      const Graph g = clique_path(k, m);
      CHECK(2 * g.edge_count() == m * (k - 1) * (k - 2) + 2 * (m - 1));
      CHECK(in_T_k(g, k));
      // gallai preset is tight on the path
      CHECK(Rational(2 * g.edge_count()) == tree_bound_rhs(preset(Preset::Gallai, k), g.order(), 0));
    }
  }
}

TEST_CASE("tree bounds on small enumerations") {
  for (int k = 5; k <= 7; ++k) {
    const TreeVerification v = verify_trees(k, 7);
    CHECK(v.violators.empty());
    CHECK(v.trees_checked == static_cast<long long>(enumerate_gallai_trees(k, 7).size()));
  }
  const TreeCheck k4 = check_tree_bounds(complete_graph(4), 5);
  CHECK(k4.has_big_clique);
  CHECK(k4.q == 4);
  CHECK(k4.with_clique.value());
  CHECK_FALSE(k4.without_clique.has_value());
  const TreeCheck c5 = check_tree_bounds(cycle_graph(5), 5);
  CHECK_FALSE(c5.has_big_clique);
  CHECK(c5.without_clique.value());
  CHECK_THROWS_AS(check_tree_bounds(cycle_graph(4), 5), PreconditionError);
  // K_1 meets the K_{k-1}-free bound with equality at k = 5
  CHECK(check_tree_bounds(Graph(1), 5).slack == 0);
}
