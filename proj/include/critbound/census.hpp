#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>

#include "critbound/coloring.hpp"
#include "critbound/rational.hpp"

namespace critbound {

/// Edge-count lower bounds for an n-vertex k-critical graph, each rounded
/// up to an integer.
struct EdgeBounds {
  long long dirac = 0;
  std::optional<long long> ky;      // needs n >= k
  long long gallai = 0;             // from k-1 + (k-3)/(k^2-3)
  std::optional<long long> main;    // smallP main bound, k >= 5
};
EdgeBounds edge_bounds(int k, int n);

struct CensusRow {
  int n = 0;
  long long graphs = 0;
  long long critical = 0;
  long long skipped = 0;
  std::optional<int> min_edges;
  std::optional<Graph> witness;  // first critical graph reaching min_edges
  EdgeBounds bounds;
};

struct CensusSummary {
  int k = 0;
  Notion notion = Notion::Chromatic;
  long long records = 0;
  long long skipped = 0;
  std::map<int, CensusRow> rows;  // by order
};

/// Reads one graph6 record per line (blank lines and a ">>graph6<<" header
/// are ignored). Graphs over the budget's vertex or edge caps, or whose
/// decision exhausts the budget, are counted as skipped. Malformed lines
/// throw ParseError carrying the line number.
CensusSummary census(std::istream& in, int k, Notion notion, const SearchBudget& budget);

}  // namespace critbound
