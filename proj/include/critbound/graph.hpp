#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace critbound {

using Vertex = int;

inline constexpr int kMaxVertices = 128;
inline constexpr int kMaxGraph6Order = 62;

/// A subset of {0..127} stored as a two-word bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr iterator(std::uint64_t hi, std::uint64_t lo) : hi_(hi), lo_(lo) {}
    constexpr Vertex operator*() const {
      return lo_ != 0 ? std::countr_zero(lo_) : 64 + std::countr_zero(hi_);
    }
    constexpr iterator& operator++() {
      if (lo_ != 0) {
        lo_ &= lo_ - 1;
      } else {
        hi_ &= hi_ - 1;
      }
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t hi_ = 0;
    std::uint64_t lo_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t low_bits) : lo_(low_bits) {}
  constexpr VertexSet(std::uint64_t hi, std::uint64_t lo) : hi_(hi), lo_(lo) {}

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    if (n <= 0) return {};
    if (n < 64) return VertexSet((std::uint64_t{1} << n) - 1);
    if (n >= 128) return VertexSet(~std::uint64_t{0}, ~std::uint64_t{0});
    return VertexSet(n == 64 ? 0 : (std::uint64_t{1} << (n - 64)) - 1, ~std::uint64_t{0});
  }
  static constexpr VertexSet single(Vertex v) {
    VertexSet s;
    s.insert(v);
    return s;
  }
  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  /// Members below 64 as a mask; the engines work on such small graphs.
  constexpr std::uint64_t low_bits() const { return lo_; }
  constexpr bool contains(Vertex v) const {
    return v < 64 ? ((lo_ >> v) & 1U) != 0 : ((hi_ >> (v - 64)) & 1U) != 0;
  }
  constexpr void insert(Vertex v) {
    if (v < 64) {
      lo_ |= std::uint64_t{1} << v;
    } else {
      hi_ |= std::uint64_t{1} << (v - 64);
    }
  }
  constexpr void erase(Vertex v) {
    if (v < 64) {
      lo_ &= ~(std::uint64_t{1} << v);
    } else {
      hi_ &= ~(std::uint64_t{1} << (v - 64));
    }
  }
  constexpr int size() const { return std::popcount(lo_) + std::popcount(hi_); }
  constexpr bool empty() const { return (lo_ | hi_) == 0; }
  constexpr Vertex min() const { return *begin(); }
  constexpr bool is_subset_of(VertexSet o) const {
    return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0;
  }

  constexpr iterator begin() const { return iterator(hi_, lo_); }
  constexpr iterator end() const { return iterator(0, 0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet operator&(VertexSet o) const { return {hi_ & o.hi_, lo_ & o.lo_}; }
  constexpr VertexSet operator|(VertexSet o) const { return {hi_ | o.hi_, lo_ | o.lo_}; }
  constexpr VertexSet operator-(VertexSet o) const { return {hi_ & ~o.hi_, lo_ & ~o.lo_}; }
  constexpr VertexSet& operator&=(VertexSet o) { return *this = *this & o; }
  constexpr VertexSet& operator|=(VertexSet o) { return *this = *this | o; }
  constexpr VertexSet& operator-=(VertexSet o) { return *this = *this - o; }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t hi_ = 0;
  std::uint64_t lo_ = 0;
};

struct Edge {
  Vertex u;
  Vertex v;
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1, n <= 128 (graph6 I/O: n <= 62).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int edge_count() const;

  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Throws PreconditionError on loops or out-of-range endpoints.
  /// Adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  int max_degree() const;
  int min_degree() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Range-checked degree.
int degree(const Graph& g, Vertex v);

double average_degree(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;    // new label -> original label
  std::vector<Vertex> from_original;  // original label -> new label, -1 if absent
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);
Graph without_vertex(const Graph& g, Vertex v);

bool is_connected(const Graph& g);
/// Vertex sets of connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components(const Graph& g, VertexSet within);

std::optional<VertexSet> find_clique(const Graph& g, int t);
bool contains_clique(const Graph& g, int t);
bool is_independent(const Graph& g, VertexSet s);
bool is_complete(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
/// Hub 0 joined to a rim cycle 1..rim.
Graph wheel_graph(int rim);

// graph6 (short form, n <= 62) and the "n m / u v" edge-list text format.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);
/// Accepts either format: multi-line or whitespace-containing input is an
/// edge list, otherwise graph6.
Graph parse_graph(std::string_view text);

}  // namespace critbound
