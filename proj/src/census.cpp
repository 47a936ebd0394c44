#include "critbound/census.hpp"

#include "critbound/bounds.hpp"
#include "critbound/errors.hpp"

namespace critbound {

namespace {

long long ceil_half(const Rational& twice) {
  const Rational half = twice / 2;
  const auto num = numerator(half);
  const auto den = denominator(half);
  long long q = static_cast<long long>(num / den);
  if (q * den < num) ++q;
  return q;
}

}  // namespace

EdgeBounds edge_bounds(int k, int n) {
  EdgeBounds b;
  b.dirac = ceil_half(Rational(dirac_bound(k, n)));
  if (n >= k) b.ky = ky_bound(k, n);
  b.gallai = ceil_half(gallai_closed_form(k) * n);
  if (k >= 5) b.main = ceil_half(main_bound(k, MainVariant::Auto, preset(Preset::SmallP, k)) * n);
  return b;
}

CensusSummary census(std::istream& in, int k, Notion notion, const SearchBudget& budget) {
  if (k < 4) throw PreconditionError("census requires k >= 4");
  CensusSummary out;
  out.k = k;
  out.notion = notion;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body(line);
    if (body.rfind(">>graph6<<", 0) == 0) body.remove_prefix(10);
    while (!body.empty() && (body.back() == '\r' || body.back() == ' ' || body.back() == '\t')) body.remove_suffix(1);
    while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) body.remove_prefix(1);
    if (body.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(body);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), ParseError::Kind::Line, line_no);
    }
    ++out.records;
    CensusRow& row = out.rows[g.order()];
    if (row.graphs == 0) {
      row.n = g.order();
      row.bounds = edge_bounds(k, g.order());
    }
    ++row.graphs;
    if (g.order() > budget.max_vertices || g.edge_count() > budget.max_edges) {
      ++row.skipped;
      ++out.skipped;
      continue;
    }
    bool critical = false;
    try {
      critical = is_critical(g, k, notion, budget);
    } catch (const BudgetExceeded&) {
      ++row.skipped;
      ++out.skipped;
      continue;
    }
    if (!critical) continue;
    ++row.critical;
    if (!row.min_edges || g.edge_count() < *row.min_edges) {
      row.min_edges = g.edge_count();
      row.witness = g;
    }
  }
  return out;
}

}  // namespace critbound
