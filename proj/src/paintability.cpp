#include <algorithm>
#include <unordered_map>

#include "critbound/coloring.hpp"
#include "critbound/errors.hpp"

namespace critbound {

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
  }
};

class PaintSolver {
 public:
  PaintSolver(const Graph& g, const SearchBudget& budget) : g_(g), budget_(budget) {}

  // tokens are indexed by vertex; only entries in r matter
  bool painter_wins(VertexSet r, std::vector<int> tokens) {
    for (Vertex v : r) {
      if (tokens[v] <= 0) return false;
    }
    // a vertex with more tokens than live neighbours can always be painted later
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex v : r) {
        if (tokens[v] > (g_.neighbors(v) & r).size()) {
          r.erase(v);
          changed = true;
        }
      }
    }
    if (r.empty()) return true;
    const auto parts = components(g_, r);
    if (parts.size() > 1) {
      for (VertexSet part : parts) {
        if (!painter_wins(part, tokens)) return false;
      }
      return true;
    }
    std::uint64_t packed = 0;
    for (Vertex v : r) packed = packed << 4 | static_cast<std::uint64_t>(tokens[v]);
    const std::pair<std::uint64_t, std::uint64_t> key{r.low_bits(), packed};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++states_ > budget_.max_states) throw BudgetExceeded("paintability: state budget exhausted");

    const bool result = solve(r, tokens);
    memo_.emplace(key, result);
    return result;
  }

 private:
  const Graph& g_;
  SearchBudget budget_;
  long long states_ = 0;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, bool, KeyHash> memo_;

  bool solve(VertexSet r, const std::vector<int>& tokens) {
    const std::vector<Vertex> verts = r.to_vector();
    const int m = static_cast<int>(verts.size());
    // Lister marks S; larger sets first
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t bits = (std::uint64_t{1} << m) - 1; bits > 0; --bits) subsets.push_back(bits);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) > std::popcount(b); });
    for (std::uint64_t bits : subsets) {
      VertexSet s;
      for (int i = 0; i < m; ++i) {
        if ((bits >> i) & 1U) s.insert(verts[i]);
      }
      if (!painter_answers(r, tokens, s)) return false;
    }
    return true;
  }

  // Painter colours a maximal independent I within S containing every
  // marked vertex on its last token.
  bool painter_answers(VertexSet r, const std::vector<int>& tokens, VertexSet s) {
    VertexSet forced;
    for (Vertex v : s) {
      if (tokens[v] == 1) forced.insert(v);
    }
    for (Vertex v : forced) {
      if (!(g_.neighbors(v) & forced).empty()) return false;
    }
    VertexSet blocked;
    for (Vertex v : forced) blocked |= g_.neighbors(v);
    const VertexSet candidates = s - forced - blocked;
    auto rec = [&](auto&& self, VertexSet chosen, VertexSet open, VertexSet skipped) -> bool {
      if (open.empty()) {
        // maximal: every skipped candidate has a chosen neighbour
        for (Vertex v : skipped) {
          if ((g_.neighbors(v) & chosen).empty()) return false;
        }
        std::vector<int> next = tokens;
        for (Vertex v : s - chosen) --next[v];
        return painter_wins(r - chosen, std::move(next));
      }
      const Vertex v = open.min();
      VertexSet rest = open;
      rest.erase(v);
      if (self(self, chosen | VertexSet::single(v), rest - g_.neighbors(v), skipped)) return true;
      return self(self, chosen, rest, skipped | VertexSet::single(v));
    };
    return rec(rec, forced, candidates, VertexSet());
  }
};

}  // namespace

bool is_f_paintable(const Graph& g, const FVector& f, const SearchBudget& budget) {
  if (static_cast<int>(f.size()) != g.order()) throw PreconditionError("f must have one entry per vertex");
  if (g.order() > budget.max_vertices || g.edge_count() > budget.max_edges || g.order() > 16) {
    throw BudgetExceeded("paintability: graph exceeds the size budget");
  }
  std::vector<int> tokens(f.begin(), f.end());
  for (int& t : tokens) t = std::min(t, 15);
  PaintSolver solver(g, budget);
  return solver.painter_wins(g.vertices(), tokens);
}

}  // namespace critbound
