#include "critbound/reducibility.hpp"

#include <algorithm>
#include <bit>

#include "critbound/errors.hpp"
#include "critbound/generators.hpp"
#include "critbound/structure.hpp"

namespace critbound {

std::string status_name(ATStatus s) {
  switch (s) {
    case ATStatus::NotRun: return "not run: hypotheses fail";
    case ATStatus::Verified: return "verified";
    case ATStatus::NotVerifiedBudget: return "not verified: budget";
  }
  return "?";
}

bool ReducibilityReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

std::vector<int> ReducibilityReport::failed() const {
  std::vector<int> out;
  for (const Hypothesis& h : hypotheses) {
    if (!h.holds) out.push_back(h.index);
  }
  return out;
}

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " is not in the graph");
}

// Items shared by all three lemmas: no K_k, components of G - Y in T_k,
// and degree caps outside Y.
std::vector<Hypothesis> common_items(const Graph& g, VertexSet y, int k, std::vector<VertexSet>& comps) {
  std::vector<Hypothesis> items;
  items.push_back({1, "K_" + std::to_string(k) + " is not a subgraph", !contains_clique(g, k)});
  comps = components(g, g.vertices() - y);
  bool trees = true;
  for (const VertexSet& c : comps) trees = trees && in_T_k(induced_subgraph(g, c).graph, k);
  items.push_back({2, "every component of G - Y is in T_k", trees});
  bool capped = true;
  for (Vertex v : g.vertices() - y) capped = capped && g.degree(v) <= k - 1;
  items.push_back({3, "d(v) <= k-1 outside Y", capped});
  return items;
}

// f(v) = d_{G'}(v) - [v in Y] on G' = G[s].
FVector lowered_degrees(const InducedSubgraph& sub, VertexSet y) {
  FVector f(sub.graph.order());
  for (Vertex v = 0; v < sub.graph.order(); ++v) {
    f[v] = sub.graph.degree(v) - (y.contains(sub.to_original[v]) ? 1 : 0);
  }
  return f;
}

bool try_at(ReducibilityReport& rep, const Graph& g, VertexSet s, VertexSet y, const SearchBudget& budget) {
  const InducedSubgraph sub = induced_subgraph(g, s);
  const FVector f = lowered_degrees(sub, y);
  for (int v : f) {
    if (v <= 0) return false;  // out-degree would have to be negative
  }
  if (sub.graph.edge_count() > budget.max_edges) {
    ++rep.subsets_skipped;
    return false;
  }
  ++rep.subsets_tested;
  try {
    if (auto cert = is_f_AT(sub.graph, f, budget)) {
      rep.status = ATStatus::Verified;
      rep.witness = s;
      rep.f = f;
      rep.certificate = std::move(cert);
      return true;
    }
  } catch (const BudgetExceeded&) {
    ++rep.subsets_skipped;
  }
  return false;
}

void search_induced(ReducibilityReport& rep, const Graph& g, VertexSet y, const SearchBudget& budget) {
  const int n = g.order();
  if (n > budget.max_vertices) {
    rep.status = ATStatus::NotVerifiedBudget;
    rep.budget_note = std::to_string(n) + " vertices exceed the subset-search cap of " +
                      std::to_string(budget.max_vertices);
    return;
  }
  std::vector<unsigned long long> masks;
  for (unsigned long long m = 1; m < (1ULL << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](auto a, auto b) { return std::popcount(a) > std::popcount(b); });
  for (unsigned long long m : masks) {
    if (try_at(rep, g, VertexSet(m), y, budget)) return;
  }
  if (rep.subsets_skipped > 0) {
    rep.status = ATStatus::NotVerifiedBudget;
    rep.budget_note = std::to_string(rep.subsets_skipped) + " induced subgraphs exceeded the f-AT budget";
    return;
  }
  throw CorrectnessFinding(rep.lemma + ": hypotheses hold but no induced subgraph is f-AT");
}

ReducibilityReport multiple_high(const std::string& lemma, const Graph& g, VertexSet y, int k, bool lopsided,
                                 const SearchBudget& budget) {
  if (!y.is_subset_of(g.vertices())) throw PreconditionError("Y is not a subset of the vertices");
  ReducibilityReport rep;
  rep.lemma = lemma;
  rep.k = k;
  std::vector<VertexSet> comps;
  rep.hypotheses = common_items(g, y, k, comps);
  const AuxiliaryBipartite aux = build_auxiliary(g, y, k);
  bool degrees = true;
  for (Vertex v : y) degrees = degrees && aux.high_degree(v) >= (lopsided ? 4 : 3);
  for (int t = 0; t < static_cast<int>(aux.trees.size()); ++t) {
    degrees = degrees && aux.tree_degree(t) >= (lopsided ? 2 : 3);
  }
  rep.hypotheses.push_back(
      {4, lopsided ? "d_B(y) >= 4 for y in Y and d_B(T) >= 2 for every component T" : "min degree of B is >= 3",
       degrees});
  if (rep.hypotheses_hold()) search_induced(rep, g, y, budget);
  return rep;
}

}  // namespace

ReducibilityReport check_lemma51(const Graph& g, Vertex x, int k, const SearchBudget& budget) {
  if (k < 5) throw PreconditionError("the single-vertex reducibility check requires k >= 5");
  require_vertex(g, x);
  ReducibilityReport rep;
  rep.lemma = "single high vertex";
  rep.k = k;
  std::vector<VertexSet> comps;
  rep.hypotheses = common_items(g, VertexSet::single(x), k, comps);
  const int t = static_cast<int>(comps.size());
  bool touches = true;
  for (const VertexSet& c : comps) {
    const InducedSubgraph sub = induced_subgraph(g, c);
    VertexSet w;
    for (Vertex u : w_k(sub.graph, k)) w.insert(sub.to_original[u]);
    touches = touches && !(g.neighbors(x) & w).empty();
  }
  rep.hypotheses.push_back({4, "x has a neighbor in W^k of every component of G - x", touches});
  rep.hypotheses.push_back({5, "d(x) >= t + 2 with t = " + std::to_string(t), g.degree(x) >= t + 2});
  if (!rep.hypotheses_hold()) return rep;

  if (g.order() > budget.max_vertices || g.edge_count() > budget.max_edges) {
    rep.status = ATStatus::NotVerifiedBudget;
    rep.budget_note = "graph exceeds the f-AT size budget";
    return rep;
  }
  FVector f(g.order());
  for (Vertex v = 0; v < g.order(); ++v) f[v] = g.degree(v) - (v == x ? 1 : 0);
  rep.f = f;
  try {
    rep.certificate = is_f_AT(g, f, budget);
  } catch (const BudgetExceeded& e) {
    rep.status = ATStatus::NotVerifiedBudget;
    rep.budget_note = e.what();
    return rep;
  }
  ++rep.subsets_tested;
  if (!rep.certificate) throw CorrectnessFinding("single high vertex: hypotheses hold but G is not f-AT");
  rep.status = ATStatus::Verified;
  rep.witness = g.vertices();
  return rep;
}

ReducibilityReport check_lemma52(const Graph& g, VertexSet y, int k, const SearchBudget& budget) {
  if (k < 7) throw PreconditionError("the symmetric multiple-high check requires k >= 7");
  return multiple_high("multiple high vertices, symmetric", g, y, k, false, budget);
}

ReducibilityReport check_lemma53(const Graph& g, VertexSet y, int k, const SearchBudget& budget) {
  if (k < 5) throw PreconditionError("the lopsided multiple-high check requires k >= 5");
  return multiple_high("multiple high vertices, lopsided", g, y, k, true, budget);
}

Lemma51Validation validate_lemma51(int k, int tree_max, int t_max, int max_edges) {
  if (t_max < 1 || t_max > 2) throw PreconditionError("validate_lemma51 supports t in {1, 2}");
  const std::vector<Graph> pool = enumerate_gallai_trees(k, tree_max);
  Lemma51Validation out;
  out.k = k;
  const SearchBudget budget{64, max_edges, kReduceBudget.max_states};

  auto run = [&](const std::vector<int>& picks) {
    Graph base(0);
    for (int i : picks) base = disjoint_union(base, pool[i]);
    const int n = base.order();
    if (n > 30) return;
    const int x = n;
    for (unsigned long long m = 1; m < (1ULL << n); ++m) {
      if (base.edge_count() + std::popcount(m) > max_edges) continue;
      Graph g(n + 1);
      for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
      for (Vertex v : VertexSet(m)) g.add_edge(x, v);
      ++out.instances;
      try {
        const ReducibilityReport rep = check_lemma51(g, x, k, budget);
        if (!rep.hypotheses_hold()) continue;
        ++out.hypotheses_held;
        if (rep.status == ATStatus::Verified) ++out.confirmed;
        if (rep.status == ATStatus::NotVerifiedBudget) ++out.budget_skipped;
      } catch (const CorrectnessFinding&) {
        ++out.hypotheses_held;
        ++out.counterexamples;
      }
    }
  };

  const int npool = static_cast<int>(pool.size());
  for (int a = 0; a < npool; ++a) {
    run({a});
    if (t_max < 2) continue;
    for (int b = a; b < npool; ++b) run({a, b});
  }
  return out;
}

}  // namespace critbound
