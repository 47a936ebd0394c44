#include "critbound/coloring.hpp"
#include "critbound/errors.hpp"

namespace critbound {

ImplicationReport implication_chain(const Graph& g, const FVector& f) {
  ImplicationReport r;
  r.at = is_f_AT(g, f).has_value();
  r.paintable = is_f_paintable(g, f);
  r.choosable = is_f_choosable(g, f).choosable;
  if (!r.consistent()) {
    throw CorrectnessFinding("implication chain violated on " + write_edge_list(g));
  }
  return r;
}

Notion parse_notion(const std::string& name) {
  if (name == "chromatic") return Notion::Chromatic;
  if (name == "list") return Notion::List;
  if (name == "paint") return Notion::Paint;
  if (name == "at") return Notion::AT;
  throw PreconditionError("unknown notion '" + name + "' (chromatic, list, paint, at)");
}

std::string notion_name(Notion n) {
  switch (n) {
    case Notion::Chromatic: return "chromatic";
    case Notion::List: return "list";
    case Notion::Paint: return "paint";
    case Notion::AT: return "at";
  }
  return "?";
}

bool colorable_under(const Graph& g, Notion notion, int colors, const std::optional<SearchBudget>& budget) {
  switch (notion) {
    case Notion::Chromatic: return is_k_colorable(g, colors, budget.value_or(kChromaticBudget));
    case Notion::List: return is_f_choosable(g, constant_f(g, colors), budget.value_or(kChooseBudget)).choosable;
    case Notion::Paint: return is_f_paintable(g, constant_f(g, colors), budget.value_or(kPaintBudget));
    case Notion::AT: return is_f_AT(g, constant_f(g, colors), budget.value_or(kATBudget)).has_value();
  }
  return false;
}

// Parameter exactly k, and every edge-deleted subgraph drops below k. A
// vertex whose removal keeps the parameter (an isolated vertex) also rules
// criticality out; edge deletion covers every other proper subgraph.
bool is_critical(const Graph& g, int k, Notion notion, const std::optional<SearchBudget>& budget) {
  if (k < 1) throw PreconditionError("criticality requires k >= 1");
  if (g.order() == 0) return false;
  if (g.order() == 1) return k == 1;
  if (g.min_degree() == 0) return false;
  if (colorable_under(g, notion, k - 1, budget)) return false;
  if (!colorable_under(g, notion, k, budget)) return false;
  for (const Edge& e : g.edges()) {
    Graph h = g;
    h.remove_edge(e.u, e.v);
    if (!colorable_under(h, notion, k - 1, budget)) return false;
  }
  return true;
}

bool is_k_critical(const Graph& g, int k) { return is_critical(g, k, Notion::Chromatic); }
bool is_k_list_critical(const Graph& g, int k) { return is_critical(g, k, Notion::List); }
bool is_k_AT_critical(const Graph& g, int k) { return is_critical(g, k, Notion::AT); }

}  // namespace critbound
