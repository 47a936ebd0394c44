#include "critbound/generators.hpp"

#include <algorithm>
#include <map>

#include "critbound/errors.hpp"

namespace critbound {

namespace {

std::vector<int> invariant_key(const Graph& g) {
  std::vector<std::vector<int>> local;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> sig{g.degree(v)};
    for (Vertex w : g.neighbors(v)) sig.push_back(g.degree(w));
    std::sort(sig.begin() + 1, sig.end());
    local.push_back(std::move(sig));
  }
  std::sort(local.begin(), local.end());
  std::vector<int> key{g.order(), g.edge_count()};
  for (const auto& sig : local) {
    key.push_back(-1);
    key.insert(key.end(), sig.begin(), sig.end());
  }
  return key;
}

// Glue a new block onto vertex `at`: `fresh` new vertices forming a clique
// with `at`, or an odd cycle through `at`.
Graph attach(const Graph& g, Vertex at, int fresh, bool cycle) {
  const int n = g.order();
  Graph out(n + fresh);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  std::vector<Vertex> block{at};
  for (int i = 0; i < fresh; ++i) block.push_back(n + i);
  if (cycle) {
    for (std::size_t i = 0; i < block.size(); ++i) out.add_edge(block[i], block[(i + 1) % block.size()]);
  } else {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) out.add_edge(block[i], block[j]);
    }
  }
  return out;
}

}  // namespace

void for_each_gallai_tree(int k, int n_max, const std::function<void(const Graph&)>& visit) {
  if (k < 4) throw PreconditionError("Gallai-tree enumeration requires k >= 4");
  if (n_max > kMaxEnumerationOrder) {
    throw BudgetExceeded("Gallai-tree enumeration is limited to n_max <= " +
                         std::to_string(kMaxEnumerationOrder));
  }
  if (n_max < 1) return;

  std::vector<std::vector<Graph>> level(n_max + 1);
  std::vector<std::map<std::vector<int>, std::vector<std::size_t>>> buckets(n_max + 1);
  auto offer = [&](Graph g) {
    const int n = g.order();
    auto& bucket = buckets[n][invariant_key(g)];
    for (std::size_t i : bucket) {
      if (are_isomorphic(level[n][i], g)) return;
    }
    bucket.push_back(level[n].size());
    level[n].push_back(std::move(g));
  };

  offer(Graph(1));
  for (int n = 1; n <= n_max; ++n) {
    for (std::size_t i = 0; i < level[n].size(); ++i) {
      const Graph g = level[n][i];
      visit(g);
      for (Vertex v = 0; v < n; ++v) {
        const int d = g.degree(v);
        for (int fresh = 1; n + fresh <= n_max; ++fresh) {
          const int size = fresh + 1;
          if (size <= k - 1 && d + fresh <= k - 1) offer(attach(g, v, fresh, false));
          if (size >= 5 && size % 2 == 1 && d + 2 <= k - 1) offer(attach(g, v, fresh, true));
        }
      }
    }
  }
}

std::vector<Graph> enumerate_gallai_trees(int k, int n_max) {
  std::vector<Graph> out;
  for_each_gallai_tree(k, n_max, [&](const Graph& g) { out.push_back(g); });
  return out;
}

Graph extremal_chain(int k, int m) {
  if (k < 5) throw PreconditionError("extremal_chain requires k >= 5");
  if (m < 1) throw PreconditionError("extremal_chain requires m >= 1");
  const int copy_size = (k - 1) + (k - 3) * (k - 2);
  if (static_cast<long long>(m) * copy_size > kMaxVertices) {
    throw PreconditionError("extremal_chain exceeds the 128-vertex limit");
  }
  Graph g(m * copy_size);
  for (int c = 0; c < m; ++c) {
    const Vertex base = c * copy_size;
    for (int i = 0; i < k - 1; ++i) {
      for (int j = i + 1; j < k - 1; ++j) g.add_edge(base + i, base + j);
    }
    for (int p = 0; p < k - 3; ++p) {
      const Vertex first = base + (k - 1) + p * (k - 2);
      for (int i = 0; i < k - 2; ++i) {
        for (int j = i + 1; j < k - 2; ++j) g.add_edge(first + i, first + j);
      }
      g.add_edge(base + 2 + p, first);
    }
  }
  for (int c = 0; c + 1 < m; ++c) {
    const Vertex from = c * copy_size + (c == 0 ? 0 : 1);
    g.add_edge(from, (c + 1) * copy_size);
  }
  return g;
}

Graph clique_path(int k, int m) {
  if (k < 4) throw PreconditionError("clique_path requires k >= 4");
  if (m < 1) throw PreconditionError("clique_path requires m >= 1");
  const int s = k - 1;
  if (static_cast<long long>(m) * s > kMaxVertices) {
    throw PreconditionError("clique_path exceeds the 128-vertex limit");
  }
  Graph g(m * s);
  for (int c = 0; c < m; ++c) {
    for (int i = 0; i < s; ++i) {
      for (int j = i + 1; j < s; ++j) g.add_edge(c * s + i, c * s + j);
    }
  }
  for (int c = 0; c + 1 < m; ++c) g.add_edge(c * s + (c == 0 ? 0 : 1), (c + 1) * s);
  return g;
}

}  // namespace critbound
