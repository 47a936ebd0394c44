#pragma once

// Brute-force oracles and small-graph corpora shared by the unit tests.
// Nothing here calls into the implementation paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "critbound/graph.hpp"

namespace critbound::testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(CRITBOUND_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Every labelled graph on n vertices, edges indexed by the pair order.
template <class F>
void for_each_labelled_graph(int n, F&& visit) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) g.add_edge(pairs[i].u, pairs[i].v);
    }
    visit(g);
  }
}

inline bool brute_connected(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  VertexSet seen = VertexSet::single(s.min());
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex v : seen) {
      const VertexSet add = (g.neighbors(v) & s) - seen;
      if (!add.empty()) {
        seen |= add;
        grew = true;
      }
    }
  }
  return seen == s;
}

/// Cut vertices by definition: removal disconnects the graph.
inline VertexSet brute_cut_vertices(const Graph& g) {
  VertexSet cuts;
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet rest = g.vertices();
    rest.erase(v);
    if (!rest.empty() && !brute_connected(g, rest)) cuts.insert(v);
  }
  return cuts;
}

/// Blocks as maximal vertex sets S, |S| >= 2, with G[S] connected and
/// without a cut vertex (plus an isolated K_1 when n == 1).
inline std::vector<VertexSet> brute_blocks(const Graph& g) {
  const int n = g.order();
  if (n == 1) return {VertexSet::single(0)};
  std::vector<VertexSet> candidates;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const VertexSet s(bits);
    if (s.size() < 2 || !brute_connected(g, s)) continue;
    bool ok = true;
    if (s.size() > 2) {
      for (Vertex v : s) {
        VertexSet rest = s;
        rest.erase(v);
        if (!brute_connected(g, rest)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) candidates.push_back(s);
  }
  std::vector<VertexSet> blocks;
  for (const VertexSet& s : candidates) {
    const bool maximal = std::none_of(candidates.begin(), candidates.end(), [&](const VertexSet& t) {
      return t != s && s.is_subset_of(t);
    });
    if (maximal) blocks.push_back(s);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

inline bool brute_has_clique(const Graph& g, int t) {
  const int n = g.order();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VertexSet s(bits);
    if (s.size() != t) continue;
    bool clique = true;
    for (Vertex u : s) {
      if (((g.neighbors(u) | VertexSet::single(u)) & s) != s) clique = false;
    }
    if (clique) return true;
  }
  return false;
}

/// Independent graph6 encoder: writes the bit string explicitly, then packs.
inline std::string reference_graph6(const Graph& g) {
  std::string bits;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
  }
  while (bits.size() % 6 != 0) bits.push_back('0');
  std::string out(1, static_cast<char>(63 + g.order()));
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    out.push_back(static_cast<char>(63 + std::stoi(bits.substr(i, 6), nullptr, 2)));
  }
  return out;
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

/// Representatives of the isomorphism classes in `graphs`.
inline std::vector<Graph> dedupe(const std::vector<Graph>& graphs) {
  std::vector<Graph> reps;
  for (const Graph& g : graphs) {
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Graph& r) {
      return r.edge_count() == g.edge_count() && degree_sequence(r) == degree_sequence(g) &&
             are_isomorphic(r, g);
    });
    if (!seen) reps.push_back(g);
  }
  return reps;
}

/// Connected graphs on exactly n vertices, one per isomorphism class.
inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> all;
  for_each_labelled_graph(n, [&](const Graph& g) {
    if (brute_connected(g, g.vertices())) all.push_back(g);
  });
  return dedupe(all);
}

}  // namespace critbound::testing
