#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "critbound/graph.hpp"

namespace critbound {

namespace {

// Joint colour refinement of two graphs of equal order. Returns false as
// soon as the colour histograms diverge.
bool refine(const Graph& a, const Graph& b, std::vector<int>& ca, std::vector<int>& cb) {
  const int n = a.order();
  ca.resize(n);
  cb.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    ca[v] = a.degree(v);
    cb[v] = b.degree(v);
  }
  int classes = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    auto signature = [](const Graph& g, const std::vector<int>& colour, Vertex v) {
      std::vector<int> sig{colour[v]};
      for (Vertex w : g.neighbors(v)) sig.push_back(colour[w]);
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<int>> sa(n), sb(n);
    for (Vertex v = 0; v < n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      ids.emplace(sa[v], 0);
      ids.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> ha(next, 0), hb(next, 0);
    for (Vertex v = 0; v < n; ++v) {
      ca[v] = ids[sa[v]];
      cb[v] = ids[sb[v]];
      ++ha[ca[v]];
      ++hb[cb[v]];
    }
    if (ha != hb) return false;
    if (next == classes) return true;
    classes = next;
  }
}

struct Matcher {
  const Graph& a;
  const Graph& b;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<Vertex> order;
  std::vector<Vertex> image;  // a-vertex -> b-vertex
  VertexSet used_b;

  bool consistent(Vertex v, Vertex w, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex x = order[i];
      if (a.has_edge(v, x) != b.has_edge(w, image[x])) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < b.order(); ++w) {
      if (used_b.contains(w) || cb[w] != ca[v] || !consistent(v, w, depth)) continue;
      image[v] = w;
      used_b.insert(w);
      if (search(depth + 1)) return true;
      used_b.erase(w);
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  std::vector<int> ca, cb;
  if (!refine(a, b, ca, cb)) return false;

  std::vector<int> class_size(static_cast<std::size_t>(n) * 2 + 1, 0);
  for (int c : ca) ++class_size[c];

  // Smallest colour class first, then prefer vertices adjacent to those
  // already placed so adjacency checks prune early.
  Matcher m{a, b, ca, cb, {}, std::vector<Vertex>(n, -1), VertexSet()};
  VertexSet placed;
  while (static_cast<int>(m.order.size()) < n) {
    Vertex best = -1;
    auto key = [&](Vertex v) {
      const int linked = (a.neighbors(v) & placed).size();
      return std::tuple(-linked, class_size[ca[v]], v);
    };
    for (Vertex v = 0; v < n; ++v) {
      if (placed.contains(v)) continue;
      if (best < 0 || key(v) < key(best)) best = v;
    }
    m.order.push_back(best);
    placed.insert(best);
  }
  return m.search(0);
}

}  // namespace critbound
