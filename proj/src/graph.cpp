#include "critbound/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "critbound/errors.hpp"

namespace critbound {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw PreconditionError("graph order " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxVertices));
  }
  adj_.assign(static_cast<std::size_t>(n), VertexSet());
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

int Graph::edge_count() const {
  int twice = 0;
  for (const VertexSet& nb : adj_) twice += nb.size();
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " +
                            std::to_string(v));
  }
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adj_[u].erase(v);
  adj_[v].erase(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (const VertexSet& nb : adj_) best = std::max(best, nb.size());
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = kMaxVertices;
  for (const VertexSet& nb : adj_) best = std::min(best, nb.size());
  return best;
}

int degree(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  return g.degree(v);
}

double average_degree(const Graph& g) {
  return g.order() == 0 ? 0.0 : 2.0 * g.edge_count() / g.order();
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) {
    throw std::out_of_range("vertex set is not contained in the graph");
  }
  InducedSubgraph out;
  out.to_original = s.to_vector();
  out.from_original.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    out.from_original[out.to_original[i]] = static_cast<Vertex>(i);
  }
  out.graph = Graph(s.size());
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    for (Vertex w : g.neighbors(out.to_original[i]) & s) {
      const Vertex j = out.from_original[w];
      if (static_cast<Vertex>(i) < j) out.graph.add_edge(static_cast<Vertex>(i), j);
    }
  }
  return out;
}

Graph without_vertex(const Graph& g, Vertex v) {
  VertexSet s = g.vertices();
  s.erase(v);
  return induced_subgraph(g, s).graph;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.min());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next = (next & within) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

namespace {

bool extend_clique(const Graph& g, VertexSet chosen, VertexSet candidates, int need,
                   VertexSet& witness) {
  if (need == 0) {
    witness = chosen;
    return true;
  }
  while (candidates.size() >= need) {
    const Vertex v = candidates.min();
    candidates.erase(v);
    VertexSet grown = chosen;
    grown.insert(v);
    if (extend_clique(g, grown, candidates & g.neighbors(v), need - 1, witness)) return true;
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_clique(const Graph& g, int t) {
  if (t < 1) throw PreconditionError("clique size must be at least 1");
  VertexSet witness;
  if (extend_clique(g, VertexSet(), g.vertices(), t, witness)) return witness;
  return std::nullopt;
}

bool contains_clique(const Graph& g, int t) { return find_clique(g, t).has_value(); }

bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s) {
    if (!(g.neighbors(v) & s).empty()) return false;
  }
  return true;
}

bool is_complete(const Graph& g) {
  const int n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph wheel_graph(int rim) {
  Graph g(rim + 1);
  for (Vertex v = 1; v <= rim; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, v % rim + 1);
  }
  return g;
}

}  // namespace critbound
