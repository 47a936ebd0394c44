#include <algorithm>
#include <map>
#include <numeric>

#include "critbound/coloring.hpp"
#include "critbound/errors.hpp"

namespace critbound {

namespace {

using ColorSet = std::uint64_t;

class ChooseSolver {
 public:
  ChooseSolver(const Graph& g, const FVector& f, const SearchBudget& budget)
      : g_(g), f_(f), budget_(budget) {}

  // A bad f-assignment of G[s] (lists indexed by vertex, empty outside s).
  std::optional<ListAssignment> bad(VertexSet s) {
    if (s.empty()) return std::nullopt;
    const std::uint64_t key = s.low_bits();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto result = solve(s);
    memo_.emplace(key, result);
    return result;
  }

 private:
  const Graph& g_;
  const FVector& f_;
  SearchBudget budget_;
  long long states_ = 0;
  std::map<std::uint64_t, std::optional<ListAssignment>> memo_;

  // Give the vertices of vs fresh lists disjoint from everything in use.
  ListAssignment with_fresh(ListAssignment lists, VertexSet vs) const {
    int next = 0;
    for (const auto& l : lists) {
      for (int c : l) next = std::max(next, c + 1);
    }
    for (Vertex v : vs) {
      lists[v].clear();
      for (int i = 0; i < f_[v]; ++i) lists[v].push_back(next++);
    }
    return lists;
  }

  void tick() {
    if (++states_ > budget_.max_states) throw BudgetExceeded("choosability: state budget exhausted");
  }

  std::optional<ListAssignment> solve(VertexSet s) {
    tick();
    ListAssignment none(g_.order());
    for (Vertex v : s) {
      if (f_[v] <= 0) return with_fresh(none, VertexSet::single(v));
    }
    for (Vertex v : s) {
      if (f_[v] > (g_.neighbors(v) & s).size()) {
        auto sub = bad(s - VertexSet::single(v));
        if (sub) return with_fresh(*sub, VertexSet::single(v));
        return std::nullopt;
      }
    }
    const auto parts = components(g_, s);
    if (parts.size() > 1) {
      for (VertexSet part : parts) {
        if (auto sub = bad(part)) return with_fresh(*sub, s - part);
      }
      return std::nullopt;
    }
    for (Vertex v : s) {
      if (auto sub = bad(s - VertexSet::single(v))) return with_fresh(*sub, VertexSet::single(v));
    }
    return core(s);
  }

  // Every proper induced subgraph of G[s] is choosable here, so a bad
  // assignment may be taken with each colour's holders inducing a connected
  // subgraph on at least two vertices.
  std::optional<ListAssignment> core(VertexSet s) {
    int total = 0;
    for (Vertex v : s) total += f_[v];
    if (total > 64) throw BudgetExceeded("choosability: more than 64 colours needed");

    Vertex last = -1;
    for (Vertex v : s) {
      if (last < 0 || f_[v] > f_[last] || (f_[v] == f_[last] && g_.degree(v) > g_.degree(last))) last = v;
    }
    std::vector<Vertex> order;
    {
      VertexSet seen = VertexSet::single(last);
      std::vector<Vertex> frontier{last};
      while (!frontier.empty()) {
        std::vector<Vertex> next;
        for (Vertex v : frontier) {
          for (Vertex w : g_.neighbors(v) & s) {
            if (!seen.contains(w)) {
              seen.insert(w);
              next.push_back(w);
              order.push_back(w);
            }
          }
        }
        frontier = std::move(next);
      }
      std::reverse(order.begin(), order.end());
    }
    last_ = last;
    order_ = order;
    scope_ = s;
    std::vector<VertexSet> holders;
    if (assign(0, holders)) return witness_;
    return std::nullopt;
  }

  Vertex last_ = -1;
  std::vector<Vertex> order_;
  VertexSet scope_;
  ListAssignment witness_;

  VertexSet unprocessed(std::size_t from) const {
    VertexSet u = VertexSet::single(last_);
    for (std::size_t j = from; j < order_.size(); ++j) u.insert(order_[j]);
    return u;
  }

  bool admissible(VertexSet m, VertexSet open) const {
    if (m.size() == 1) return !(g_.neighbors(m.min()) & open).empty();
    const VertexSet allowed = m | open;
    VertexSet reached = VertexSet::single(m.min());
    VertexSet frontier = reached;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g_.neighbors(v) & allowed;
      next -= reached;
      reached |= next;
      frontier = next;
    }
    return m.is_subset_of(reached);
  }

  bool assign(std::size_t i, std::vector<VertexSet>& holders) {
    if (i == order_.size()) return finish(holders);
    tick();
    const Vertex v = order_[i];
    const VertexSet open = unprocessed(i + 1);
    const bool fresh_ok = !(g_.neighbors(v) & open).empty();

    // group interchangeable colours: same holder set
    std::vector<std::pair<VertexSet, std::vector<int>>> groups;
    {
      std::map<VertexSet, std::vector<int>> by_mask;
      for (int c = 0; c < static_cast<int>(holders.size()); ++c) by_mask[holders[c]].push_back(c);
      for (auto& [m, cs] : by_mask) groups.emplace_back(m, std::move(cs));
    }
    std::vector<int> take(groups.size(), 0);
    auto pick = [&](auto&& self, std::size_t gi, int remaining) -> bool {
      if (gi == groups.size()) {
        if (remaining > 0 && !fresh_ok) return false;
        std::vector<VertexSet> next = holders;
        for (std::size_t j = 0; j < groups.size(); ++j) {
          for (int t = 0; t < take[j]; ++t) next[groups[j].second[t]].insert(v);
        }
        for (int t = 0; t < remaining; ++t) next.push_back(VertexSet::single(v));
        for (VertexSet m : next) {
          if (!admissible(m, open)) return false;
        }
        return assign(i + 1, next);
      }
      const int avail = static_cast<int>(groups[gi].second.size());
      for (int t = std::min(avail, remaining); t >= 0; --t) {
        take[gi] = t;
        if (self(self, gi + 1, remaining - t)) return true;
      }
      take[gi] = 0;
      return false;
    };
    return pick(pick, 0, f_[v]);
  }

  // Last vertex: a bad list exists iff the colours that every colouring of
  // the rest puts on its neighbourhood number at least f(last).
  bool finish(const std::vector<VertexSet>& holders) {
    const int colors = static_cast<int>(holders.size());
    const VertexSet rest = scope_ - VertexSet::single(last_);
    std::vector<ColorSet> list(g_.order(), 0);
    for (int c = 0; c < colors; ++c) {
      for (Vertex v : holders[c]) list[v] |= ColorSet{1} << c;
    }
    const VertexSet nb = g_.neighbors(last_) & rest;
    std::vector<Vertex> seq;
    for (Vertex v : nb) seq.push_back(v);
    const std::size_t split = seq.size();
    for (Vertex v : rest - nb) seq.push_back(v);

    ColorSet common = 0;
    for (Vertex v : nb) common |= list[v];
    const int need = f_[last_];
    if (std::popcount(common) < need) return false;

    std::vector<int> color(g_.order(), -1);
    bool any = false;
    auto fits = [&](Vertex v, int c) {
      for (Vertex w : g_.neighbors(v) & rest) {
        if (color[w] == c) return false;
      }
      return true;
    };
    auto extend_rest = [&](auto&& self, std::size_t j) -> bool {
      if (j == seq.size()) return true;
      const Vertex v = seq[j];
      for (ColorSet cs = list[v]; cs; cs &= cs - 1) {
        const int c = std::countr_zero(cs);
        if (!fits(v, c)) continue;
        color[v] = c;
        const bool ok = self(self, j + 1);
        color[v] = -1;
        if (ok) return true;
      }
      return false;
    };
    // returns false once the intersection is too small
    auto walk = [&](auto&& self, std::size_t j, ColorSet used) -> bool {
      tick();
      if (j == split) {
        const ColorSet narrowed = common & used;
        if (narrowed == common && any) return true;
        if (!extend_rest(extend_rest, split)) return true;
        any = true;
        common = narrowed;
        return std::popcount(common) >= need;
      }
      const Vertex v = seq[j];
      for (ColorSet cs = list[v]; cs; cs &= cs - 1) {
        const int c = std::countr_zero(cs);
        if (!fits(v, c)) continue;
        color[v] = c;
        const bool go = self(self, j + 1, used | (ColorSet{1} << c));
        color[v] = -1;
        if (!go) return false;
      }
      return true;
    };
    if (!walk(walk, 0, 0)) return false;

    witness_.assign(g_.order(), {});
    for (Vertex v : rest) {
      for (ColorSet cs = list[v]; cs; cs &= cs - 1) witness_[v].push_back(std::countr_zero(cs));
    }
    if (!any) {
      // the rest is uncolourable on its own
      witness_ = with_fresh(witness_, VertexSet::single(last_));
      return true;
    }
    for (ColorSet cs = common; cs && static_cast<int>(witness_[last_].size()) < need; cs &= cs - 1) {
      witness_[last_].push_back(std::countr_zero(cs));
    }
    return true;
  }
};

}  // namespace

ChoosabilityResult is_f_choosable(const Graph& g, const FVector& f, const SearchBudget& budget) {
  if (static_cast<int>(f.size()) != g.order()) throw PreconditionError("f must have one entry per vertex");
  if (g.order() > budget.max_vertices || g.edge_count() > budget.max_edges) {
    throw BudgetExceeded("choosability: graph exceeds the size budget");
  }
  if (g.order() > 64) throw BudgetExceeded("choosability: more than 64 vertices");
  ChooseSolver solver(g, f, budget);
  auto bad = solver.bad(g.vertices());
  ChoosabilityResult result;
  result.choosable = !bad.has_value();
  result.bad_assignment = std::move(bad);
  return result;
}

}  // namespace critbound
