#include <doctest.h>

#include <sstream>

#include "critbound/bounds.hpp"
#include "critbound/census.hpp"
#include "critbound/errors.hpp"
#include "test_support.hpp"

using namespace critbound;

namespace {

std::string stream_of(const std::vector<Graph>& graphs) {
  std::string out;
  for (const Graph& g : graphs) out += critbound::testing::reference_graph6(g) + "\n";
  return out;
}

}  // namespace

TEST_CASE("census of connected graphs on six vertices") {
  const auto graphs = critbound::testing::connected_graphs(6);
  CHECK(graphs.size() == 112);
  std::istringstream in(">>graph6<<" + stream_of(graphs));
  const CensusSummary s = census(in, 4, Notion::Chromatic, kChromaticBudget);
  CHECK(s.records == 112);
  CHECK(s.skipped == 0);
  const CensusRow& row = s.rows.at(6);
  REQUIRE(row.min_edges);
  CHECK(*row.min_edges == 10);
  CHECK(*row.min_edges == ky_bound(4, 6));
  CHECK(row.bounds.ky == 10);
  CHECK(are_isomorphic(*row.witness, wheel_graph(5)));
  CHECK(row.critical == 1);
}

TEST_CASE("census of small connected graphs") {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : critbound::testing::connected_graphs(n)) graphs.push_back(g);
  }
  std::istringstream in(stream_of(graphs));
  const CensusSummary s = census(in, 4, Notion::Chromatic, kChromaticBudget);
  long long critical = 0;
  for (const auto& [n, row] : s.rows) critical += row.critical;
  CHECK(critical == 1);
  CHECK(s.rows.at(4).min_edges == 6);
  CHECK_FALSE(s.rows.at(5).min_edges);
  CHECK(s.rows.at(5).bounds.dirac == 8);
}

TEST_CASE("census budgets and malformed input") {
  std::istringstream big(critbound::testing::reference_graph6(complete_graph(7)) + "\n");
  const CensusSummary s = census(big, 4, Notion::List, SearchBudget{6, 45, 1000});
  CHECK(s.skipped == 1);
  CHECK(s.rows.at(7).skipped == 1);

  std::istringstream bad("D~{\n\nnot graph6 \x01\n");
  try {
    census(bad, 4, Notion::Chromatic, kChromaticBudget);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Line);
    CHECK(e.position() == 3);
  }
}

TEST_CASE("edge bounds") {
  const EdgeBounds b = edge_bounds(7, 20);
  CHECK(b.dirac == (6 * 20 + 4 + 1) / 2);
  CHECK(b.main.has_value());
  CHECK(*b.main >= b.gallai);
  CHECK_FALSE(edge_bounds(4, 6).main);
}
