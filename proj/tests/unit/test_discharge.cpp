#include <doctest.h>

#include "critbound/discharge.hpp"
#include "critbound/errors.hpp"

using namespace critbound;

namespace {

Rational r(long long n, long long d = 1) { return Rational(n, d); }

Rational sum(const std::vector<Rational>& xs) {
  Rational s = 0;
  for (const Rational& x : xs) s += x;
  return s;
}

// Recompute finals from scratch and compare with what the run reported.
void check_bookkeeping(const Graph& g, const ChargeLedger& ledger) {
  REQUIRE(ledger.initial.size() == static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) CHECK(ledger.initial[v] == g.degree(v));
  std::vector<Rational> charge(ledger.initial);
  for (const Transfer& t : ledger.transfers) {
    CHECK(t.amount > 0);
    charge[t.from] -= t.amount;
    charge[t.to] += t.amount;
  }
  CHECK(charge == ledger.final);
  CHECK(ledger.replay() == ledger.final);
  CHECK(sum(ledger.final) == 2 * g.edge_count());
}

Graph three_by_three(int k) {
  const Graph clique = complete_graph(k - 1);
  std::vector<HighAttachment> highs(3);
  for (int y = 0; y < 3; ++y) {
    for (int t = 0; t < 3; ++t) highs[y].targets.emplace_back(t, y);
  }
  return build_discharge_instance(k, {clique, clique, clique}, highs);
}

}  // namespace

TEST_CASE("discharge constants") {
  const DischargeParams sym = make_params(7, preset(Preset::SmallP, 7), DischargeMode::Symmetric);
  CHECK(sym.epsilon == r(13, 151));
  CHECK(sym.gamma == r(27, 151));
  CHECK(sym.target == 6 + r(18, 151));

  const DischargeParams lop = make_params(5, preset(Preset::SmallP, 5), DischargeMode::Lopsided);
  CHECK(lop.epsilon == r(1, 10));
  CHECK(lop.gamma == r(2, 10));
  CHECK(lop.target == 4 + r(1, 10));

  const DischargeParams gal = make_params(7, preset(Preset::Gallai, 7), DischargeMode::Symmetric);
  CHECK(gal.target == 6 + r(4, 46));

  CHECK_THROWS_AS(make_params(5, preset(Preset::SmallP, 5), DischargeMode::Symmetric), PreconditionError);
  CHECK(default_mode(5) == DischargeMode::Lopsided);
  CHECK(default_mode(7) == DischargeMode::Symmetric);
}

TEST_CASE("k-vertex identity for every preset") {
  for (int k = 5; k <= 30; ++k) {
    for (Preset which : {Preset::Gallai, Preset::KS, Preset::SmallP}) {
      for (DischargeMode mode : {DischargeMode::Symmetric, DischargeMode::Lopsided}) {
        const DischargeParams p = discharge_constants(k, preset(which, k), mode);
        CHECK(k_vertex_identity_holds(p));
        const Rational lhs = 1 - (3 * p.gamma + (k - 3) * p.epsilon);
        if (mode == DischargeMode::Symmetric) CHECK(lhs == p.epsilon * (2 - p.bp.p));
      }
    }
  }
}

TEST_CASE("gallai rules on the 5-wheel") {
  const Graph w = wheel_graph(5);
  const GallaiDischargeReport rep = run_gallai_discharge(w, 4);
  check_bookkeeping(w, rep.ledger);
  CHECK(rep.per_edge == r(3, 13));
  CHECK(rep.target == r(40, 13));
  Vertex hub = 0;
  for (Vertex v = 0; v < w.order(); ++v) {
    if (w.degree(v) == 5) hub = v;
  }
  for (Vertex v = 0; v < w.order(); ++v) {
    CHECK(rep.ledger.final[v] == (v == hub ? r(50, 13) : 3 + r(3, 13)));
  }
  CHECK(rep.min_final == r(42, 13));
  CHECK(rep.all_meet_target);
  REQUIRE(rep.ledger.component_shares.size() == 1);
  CHECK(rep.ledger.component_shares[0].vertices.size() == 5);

  const GallaiDischargeReport k5 = run_gallai_discharge(complete_graph(5), 4);
  CHECK(k5.ledger.transfers.empty());
  CHECK(k5.min_final == 4);

  CHECK_THROWS_AS(run_gallai_discharge(cycle_graph(5), 4), PreconditionError);
}

TEST_CASE("tree audits") {
  const DischargeParams p = make_params(7, preset(Preset::SmallP, 7), DischargeMode::Symmetric);
  const TreeAudit k6 = tree_charge_audit(complete_graph(6), p);
  CHECK(k6.a == 0);
  CHECK(k6.q == 6);
  CHECK(k6.has_big_clique);
  CHECK(k6.floor == r(108, 151));
  CHECK(k6.required == 4 * p.gamma);

  const TreeAudit c5 = tree_charge_audit(cycle_graph(5), p);
  CHECK(c5.a == 20);
  CHECK(c5.q == 0);
  CHECK(c5.required == r(260, 151));
  CHECK(c5.floor == r(90, 151));

  const TreeAudit one = tree_charge_audit(complete_graph(1), p);
  CHECK(one.a == 6);
  CHECK(one.required >= one.floor);
}

TEST_CASE("padded K6 at k = 7") {
  const DischargeParams p = make_params(7, preset(Preset::SmallP, 7), DischargeMode::Symmetric);
  const Graph g = build_discharge_instance(7, {complete_graph(6)}, {});
  const MainDischargeReport rep = run_main_discharge(g, p);
  REQUIRE(rep.eliminated);
  check_bookkeeping(g, rep.ledger);
  int rule2 = 0;
  for (const Transfer& t : rep.ledger.transfers) {
    if (t.rule == Rule::R2) {
      ++rule2;
      CHECK(t.to < 6);
      CHECK(g.degree(t.from) >= 8);
    }
  }
  CHECK(rule2 == 6);
  REQUIRE(rep.audits.size() == 1);
  CHECK(rep.audits[0].received == 6 * p.gamma);
  CHECK(rep.audits[0].ok);
  for (Vertex v = 0; v < 6; ++v) CHECK(rep.ledger.final[v] == 6 + p.gamma);
  CHECK(rep.all_meet_target);
  CHECK(rep.higher_ok);
  CHECK(rep.sponsorship[0].without_gamma == 0);
}

TEST_CASE("complete bipartite auxiliary blocks elimination") {
  const Graph g = three_by_three(7);
  const DischargeParams p = make_params(7, preset(Preset::SmallP, 7), DischargeMode::Symmetric);
  const MainDischargeReport rep = run_main_discharge(g, p);
  CHECK_FALSE(rep.eliminated);
  CHECK(rep.elimination.residual_trees.size() == 3);
  CHECK(rep.elimination.residual_high.size() == 3);
  CHECK(rep.elimination.residual_edges.size() == 9);
  CHECK(rep.ledger.transfers.empty());
}

TEST_CASE("preconditions of the main procedure") {
  const DischargeParams p = make_params(7, preset(Preset::SmallP, 7), DischargeMode::Symmetric);
  CHECK_THROWS_AS(run_main_discharge(cycle_graph(6), p), PreconditionError);
  CHECK_THROWS_AS(run_main_discharge(complete_graph(4), discharge_constants(5, preset(Preset::SmallP, 5),
                                                                            DischargeMode::Lopsided)),
                  PreconditionError);
  CHECK(run_main_discharge(complete_graph(8), p).ledger.transfers.empty());
  CHECK_THROWS_AS(build_discharge_instance(7, {complete_graph(6)}, {HighAttachment{{{0, 0}, {0, 0}}}}),
                  PreconditionError);
}

TEST_CASE("corpus properties") {
  for (int k : {5, 6, 7}) {
    const DischargeMode mode = default_mode(k);
    const DischargeParams p = make_params(k, preset(Preset::SmallP, k), mode);
    const auto corpus = discharge_corpus(k, 8);
    CHECK(corpus.size() >= 14);
    const int sends = mode == DischargeMode::Symmetric ? 3 : 4;
    const Rational cap = sends * p.gamma + (k - sends) * p.epsilon;
    for (const DischargeInstance& inst : corpus) {
      CAPTURE(k);
      CAPTURE(inst.name);
      const MainDischargeReport rep = run_main_discharge(inst.graph, p);
      REQUIRE(rep.eliminated);
      check_bookkeeping(inst.graph, rep.ledger);
      std::vector<Rational> out(inst.graph.order(), 0);
      for (const Transfer& t : rep.ledger.transfers) {
        if (t.rule != Rule::R4Share) out[t.from] += t.amount;
      }
      for (Vertex v = 0; v < inst.graph.order(); ++v) {
        if (inst.graph.degree(v) == k) CHECK(out[v] <= cap);
      }
      for (const KVertexStats& s : rep.k_vertices) CHECK(s.ok);
      for (const ComponentSponsorship& s : rep.sponsorship) CHECK(s.ok);
      for (const TreeAudit& a : rep.audits) {
        CHECK(a.ok);
        CHECK(a.received >= a.required);
        CHECK(a.required >= a.floor);
      }
      CHECK(rep.higher_ok);
      CHECK(rep.all_meet_target);
    }
  }
}
