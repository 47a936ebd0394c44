#include <algorithm>

#include "critbound/coloring.hpp"
#include "critbound/errors.hpp"

namespace critbound {

namespace {

void check_size(const Graph& g, const SearchBudget& budget, const char* what) {
  if (g.order() > budget.max_vertices || g.edge_count() > budget.max_edges) {
    throw BudgetExceeded(std::string(what) + ": graph exceeds the size budget (" +
                         std::to_string(budget.max_vertices) + " vertices, " +
                         std::to_string(budget.max_edges) + " edges)");
  }
}

struct Colorer {
  const Graph& g;
  int k;
  long long max_states;
  long long states = 0;
  std::vector<int> color;

  // DSATUR order: most distinct neighbour colours, then highest degree.
  bool extend(int colored) {
    if (colored == g.order()) return true;
    if (++states > max_states) throw BudgetExceeded("k-colorability: state budget exhausted");
    Vertex best = -1;
    int best_sat = -1, best_deg = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (color[v] >= 0) continue;
      std::uint64_t used = 0;
      for (Vertex w : g.neighbors(v)) {
        if (color[w] >= 0) used |= std::uint64_t{1} << color[w];
      }
      const int sat = std::popcount(used);
      if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = g.degree(v);
      }
    }
    std::uint64_t used = 0;
    int max_used = -1;
    for (Vertex v = 0; v < g.order(); ++v) max_used = std::max(max_used, color[v]);
    for (Vertex w : g.neighbors(best)) {
      if (color[w] >= 0) used |= std::uint64_t{1} << color[w];
    }
    // a colour never used so far is interchangeable with any other unused one
    const int limit = std::min(k, max_used + 2);
    for (int c = 0; c < limit; ++c) {
      if ((used >> c) & 1U) continue;
      color[best] = c;
      if (extend(colored + 1)) return true;
      color[best] = -1;
    }
    return false;
  }
};

}  // namespace

FVector constant_f(const Graph& g, int value) { return FVector(g.order(), value); }

FVector degree_f(const Graph& g) {
  FVector f(g.order());
  for (Vertex v = 0; v < g.order(); ++v) f[v] = g.degree(v);
  return f;
}

bool is_k_colorable(const Graph& g, int k, const SearchBudget& budget) {
  check_size(g, budget, "k-colorability");
  if (g.order() == 0) return true;
  if (k <= 0) return false;
  if (k >= g.order()) return true;
  Colorer c{g, k, budget.max_states, 0, std::vector<int>(g.order(), -1)};
  return c.extend(0);
}

int chromatic_number(const Graph& g, const SearchBudget& budget) {
  check_size(g, budget, "chromatic_number");
  if (g.order() == 0) return 0;
  int k = 1;
  while (k <= g.order() && find_clique(g, k + 1)) ++k;
  while (!is_k_colorable(g, k, budget)) ++k;
  return k;
}

std::optional<std::vector<int>> list_coloring(const Graph& g, const ListAssignment& lists) {
  if (static_cast<int>(lists.size()) != g.order()) {
    throw PreconditionError("list assignment size does not match the graph order");
  }
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return lists[a].size() < lists[b].size(); });
  std::vector<int> color(g.order(), 0);
  std::vector<bool> done(g.order(), false);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const Vertex v = order[i];
    for (int c : lists[v]) {
      bool clash = false;
      for (Vertex w : g.neighbors(v)) {
        if (done[w] && color[w] == c) clash = true;
      }
      if (clash) continue;
      color[v] = c;
      done[v] = true;
      if (self(self, i + 1)) return true;
      done[v] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return color;
}

}  // namespace critbound
