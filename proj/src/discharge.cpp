#include "critbound/discharge.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "critbound/errors.hpp"
#include "critbound/generators.hpp"

namespace critbound {

std::string mode_name(DischargeMode m) { return m == DischargeMode::Symmetric ? "symmetric" : "lopsided"; }

DischargeMode default_mode(int k) {
  if (k == 5 || k == 6) return DischargeMode::Lopsided;
  if (k >= 7) return DischargeMode::Symmetric;
  throw PreconditionError("the main discharging procedure requires k >= 5");
}

DischargeParams discharge_constants(int k, const BoundParams& bp, DischargeMode mode) {
  if (bp.k != k) throw PreconditionError("parameter tuple was built for a different k");
  const int weight = mode == DischargeMode::Symmetric ? 3 : 4;
  const Rational den = k + 2 + weight * bp.h - bp.p;
  if (den <= 0) throw PreconditionError("discharge constants: nonpositive denominator");
  DischargeParams out;
  out.k = k;
  out.bp = bp;
  out.mode = mode;
  out.epsilon = 1 / den;
  out.gamma = out.epsilon * (bp.h + 1);
  out.target = (k - 1) + (2 - bp.p) * out.epsilon;
  return out;
}

DischargeParams make_params(int k, const BoundParams& bp, DischargeMode mode) {
  const ConditionReport report = mode == DischargeMode::Symmetric ? check_thm41(bp) : check_thm43(bp);
  if (!report.all()) {
    std::string msg = "discharge parameters: conditions failed:";
    for (int i : report.failed()) msg += " (" + std::to_string(i) + ")";
    throw PreconditionError(msg);
  }
  return discharge_constants(k, bp, mode);
}

bool k_vertex_identity_holds(const DischargeParams& p) {
  const int sends = p.mode == DischargeMode::Symmetric ? 3 : 4;
  return 1 - (sends * p.gamma + (p.k - sends) * p.epsilon) == p.epsilon * (2 - p.bp.p);
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3ai: return "R3ai";
    case Rule::R3bi: return "R3bi";
    case Rule::R4Share: return "R4-share";
    case Rule::G1: return "G1";
    case Rule::G2: return "G2";
  }
  return "?";
}

std::vector<Rational> ChargeLedger::replay() const {
  std::vector<Rational> charge = initial;
  for (const Transfer& t : transfers) {
    charge[t.from] -= t.amount;
    charge[t.to] += t.amount;
  }
  return charge;
}

Rational ChargeLedger::total_initial() const {
  Rational s = 0;
  for (const Rational& r : initial) s += r;
  return s;
}

Rational ChargeLedger::total_final() const {
  Rational s = 0;
  for (const Rational& r : final) s += r;
  return s;
}

namespace {

class LedgerBuilder {
 public:
  explicit LedgerBuilder(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) ledger_.initial.emplace_back(g.degree(v));
    charge_ = ledger_.initial;
  }

  void send(Rule rule, Vertex from, Vertex to, const Rational& amount) {
    ledger_.transfers.push_back({rule, from, to, amount});
    charge_[from] -= amount;
    charge_[to] += amount;
  }

  // Equalise charge on `part`, logging surplus-to-deficit moves.
  void share(Rule rule, int component, VertexSet part) {
    Rational total = 0;
    for (Vertex v : part) total += charge_[v];
    const Rational each = total / part.size();
    ledger_.component_shares.push_back({component, part, total, each});
    std::vector<Vertex> givers, takers;
    for (Vertex v : part) {
      if (charge_[v] > each) givers.push_back(v);
      if (charge_[v] < each) takers.push_back(v);
    }
    std::size_t gi = 0;
    for (Vertex t : takers) {
      while (charge_[t] < each) {
        const Vertex giver = givers[gi];
        const Rational amount = std::min(charge_[giver] - each, each - charge_[t]);
        send(rule, giver, t, amount);
        if (charge_[giver] == each) ++gi;
      }
    }
  }

  const Rational& charge(Vertex v) const { return charge_[v]; }

  ChargeLedger finish() {
    ledger_.final = charge_;
    return std::move(ledger_);
  }

 private:
  ChargeLedger ledger_;
  std::vector<Rational> charge_;
};

void require_min_degree(const Graph& g, int k) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < k - 1) {
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                              " < k-1 = " + std::to_string(k - 1));
    }
  }
}

void require_trees(const LowHighSplit& split, int k) {
  for (std::size_t i = 0; i < split.low.size(); ++i) {
    if (!in_T_k(split.low[i].graph.graph, k)) {
      std::string members;
      for (Vertex v : split.low[i].vertices) members += (members.empty() ? "" : ",") + std::to_string(v);
      throw PreconditionError("component " + std::to_string(i) + " of the (k-1)-vertices {" + members +
                              "} is not a Gallai tree of max degree <= k-1 other than K_k");
    }
  }
}

Rational min_of(const std::vector<Rational>& xs) {
  Rational m = xs.front();
  for (const Rational& x : xs) m = std::min(m, x);
  return m;
}

}  // namespace

GallaiDischargeReport run_gallai_discharge(const Graph& g, int k) {
  if (k < 4) throw PreconditionError("the Gallai discharging procedure requires k >= 4");
  if (g.order() == 0) throw PreconditionError("empty graph");
  require_min_degree(g, k);
  const LowHighSplit split = low_high_split(g, k);
  require_trees(split, k);

  GallaiDischargeReport out;
  out.k = k;
  out.per_edge = Rational(k - 1, k * k - 3);
  out.target = (k - 1) + Rational(k - 3, k * k - 3);
  LedgerBuilder lb(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < k) continue;
    for (Vertex u : g.neighbors(v)) {
      if (g.degree(u) == k - 1) lb.send(Rule::G1, v, u, out.per_edge);
    }
  }
  for (std::size_t i = 0; i < split.low.size(); ++i) lb.share(Rule::G2, static_cast<int>(i), split.low[i].vertices);
  out.ledger = lb.finish();
  out.min_final = min_of(out.ledger.final);
  out.all_meet_target = out.min_final >= out.target;
  return out;
}

TreeAudit tree_charge_audit(const Graph& t, const DischargeParams& params) {
  const int k = params.k;
  TreeAudit a;
  a.order = t.order();
  a.twice_edges = 2 * t.edge_count();
  a.q = q_value(t, k);
  a.has_big_clique = contains_clique(t, k - 1);
  a.a = Rational((k - 1) * a.order - a.twice_edges - a.q);
  const int lost = params.mode == DischargeMode::Symmetric ? 2 : 1;
  a.required = params.epsilon * a.a;
  if (a.has_big_clique) a.required += params.gamma * (a.q - lost);
  a.floor = params.epsilon * (2 - params.bp.p) * a.order;
  return a;
}

MainDischargeReport run_main_discharge(const Graph& g, const DischargeParams& params) {
  const int k = params.k;
  if (k < 5) throw PreconditionError("the main discharging procedure requires k >= 5");
  if (g.order() == 0) throw PreconditionError("empty graph");
  require_min_degree(g, k);
  const LowHighSplit split = low_high_split(g, k);
  require_trees(split, k);

  MainDischargeReport out;
  out.params = params;
  out.aux = build_auxiliary(g, k);
  out.elimination = eliminate(out.aux, params.mode == DischargeMode::Symmetric ? EliminationMode::Symmetric
                                                                               : EliminationMode::Lopsided);
  out.eliminated = out.elimination.success;
  if (!out.eliminated) return out;

  const int n = g.order();
  std::vector<int> comp(n, -1);
  VertexSet in_w;
  for (std::size_t i = 0; i < split.low.size(); ++i) {
    for (Vertex v : split.low[i].vertices) comp[v] = static_cast<int>(i);
    in_w |= split.low[i].w;
  }
  auto is_low = [&](Vertex v) { return comp[v] >= 0; };

  LedgerBuilder lb(g);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < k) continue;
    for (Vertex u : g.neighbors(v)) {
      if (is_low(u) && !in_w.contains(u)) lb.send(Rule::R1, v, u, params.epsilon);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < k + 1) continue;
    for (Vertex u : g.neighbors(v)) {
      if (is_low(u) && in_w.contains(u)) lb.send(Rule::R2, v, u, params.gamma);
    }
  }

  std::vector<bool> tree_alive(split.low.size(), true);
  VertexSet high_alive = out.aux.high_side;
  for (const EliminationStep& step : out.elimination.order) {
    if (step.side == EliminationStep::Side::Tree) {
      const VertexSet w = out.aux.tree_w[step.id];
      for (Vertex v : high_alive) {
        const VertexSet hit = g.neighbors(v) & w;
        if (hit.size() == 2) lb.send(Rule::R3ai, v, hit.min(), params.gamma);
      }
      tree_alive[step.id] = false;
    } else {
      const Vertex v = step.id;
      for (const auto& [y, t] : out.aux.edges) {
        if (y != v || !tree_alive[t]) continue;
        for (Vertex x : g.neighbors(v) & out.aux.tree_w[t]) lb.send(Rule::R3bi, v, x, params.gamma);
      }
      high_alive.erase(v);
    }
  }

  std::vector<Rational> received(split.low.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (is_low(v)) received[comp[v]] += lb.charge(v) - (k - 1);
  }
  for (std::size_t i = 0; i < split.low.size(); ++i) lb.share(Rule::R4Share, static_cast<int>(i), split.low[i].vertices);
  out.ledger = lb.finish();

  for (Vertex v = 0; v < n; ++v) out.margin.push_back(out.ledger.final[v] - params.target);
  out.min_final = min_of(out.ledger.final);
  out.all_meet_target = min_of(out.margin) >= 0;

  const int sends = params.mode == DischargeMode::Symmetric ? 3 : 4;
  const Rational cap = sends * params.gamma + (k - sends) * params.epsilon;
  std::map<std::pair<Vertex, Vertex>, bool> gamma_edge;
  std::vector<int> gamma_count(n, 0);
  std::vector<Rational> outflow(n, 0);
  for (const Transfer& t : out.ledger.transfers) {
    if (t.rule == Rule::R4Share) continue;
    outflow[t.from] += t.amount;
    if (t.rule == Rule::R2 || t.rule == Rule::R3ai || t.rule == Rule::R3bi) gamma_edge[{t.from, t.to}] = true;
    if (t.rule == Rule::R3ai || t.rule == Rule::R3bi) ++gamma_count[t.from];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != k) continue;
    out.k_vertices.push_back({v, gamma_count[v], outflow[v], cap, outflow[v] <= cap});
  }
  out.higher_ok = true;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= k + 1 && out.ledger.final[v] < (1 - params.gamma) * g.degree(v)) out.higher_ok = false;
  }

  const int allowed = params.mode == DischargeMode::Symmetric ? 2 : 1;
  for (std::size_t i = 0; i < split.low.size(); ++i) {
    ComponentSponsorship s;
    s.component = static_cast<int>(i);
    s.allowed = allowed;
    for (Vertex x : split.low[i].w) {
      for (Vertex y : g.neighbors(x) - split.low[i].vertices) {
        ++s.w_edges;
        if (!gamma_edge.count({y, x})) ++s.without_gamma;
      }
    }
    s.ok = s.without_gamma <= allowed;
    out.sponsorship.push_back(s);

    TreeAudit a = tree_charge_audit(split.low[i].graph.graph, params);
    a.component = static_cast<int>(i);
    a.received = received[i];
    a.ok = a.received >= a.required;
    out.audits.push_back(a);
  }
  return out;
}

Graph build_discharge_instance(int k, const std::vector<Graph>& trees, const std::vector<HighAttachment>& highs) {
  std::vector<int> offset;
  int n = 0;
  for (const Graph& t : trees) {
    offset.push_back(n);
    n += t.order();
  }
  const int first_high = n;
  n += static_cast<int>(highs.size());

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (const Edge& e : trees[i].edges()) edges.emplace_back(offset[i] + e.u, offset[i] + e.v);
  }
  std::vector<int> deficit(n, 0);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (Vertex v = 0; v < trees[i].order(); ++v) deficit[offset[i] + v] = (k - 1) - trees[i].degree(v);
  }
  for (std::size_t h = 0; h < highs.size(); ++h) {
    const Vertex y = first_high + static_cast<int>(h);
    deficit[y] = k;
    for (const auto& [t, v] : highs[h].targets) {
      if (t < 0 || t >= static_cast<int>(trees.size()) || v < 0 || v >= trees[t].order()) {
        throw PreconditionError("attachment names a missing tree vertex");
      }
      edges.emplace_back(offset[t] + v, y);
      --deficit[offset[t] + v];
      --deficit[y];
    }
  }
  int widest = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (deficit[v] < 0) throw PreconditionError("vertex " + std::to_string(v) + " is over-attached");
    widest = std::max(widest, deficit[v]);
  }
  const int pad = std::max(k + 2, widest);
  const int first_pad = n;
  n += pad;
  if (n > kMaxVertices) throw PreconditionError("instance exceeds the vertex limit");
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (g.has_edge(u, v)) throw PreconditionError("duplicate attachment");
    g.add_edge(u, v);
  }
  for (Vertex a = first_pad; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  int cursor = 0;
  for (Vertex v = 0; v < first_pad; ++v) {
    for (int i = 0; i < deficit[v]; ++i) {
      g.add_edge(v, first_pad + (cursor + i) % pad);
    }
    cursor = (cursor + deficit[v]) % pad;
  }
  return g;
}

namespace {

bool accepted(const Graph& g, int k) {
  const LowHighSplit split = low_high_split(g, k);
  if (!split.deficient.empty()) return false;
  for (const LowComponent& lc : split.low) {
    if (!in_T_k(lc.graph.graph, k)) return false;
  }
  const auto mode = default_mode(k) == DischargeMode::Symmetric ? EliminationMode::Symmetric
                                                                 : EliminationMode::Lopsided;
  return eliminate(build_auxiliary(g, k), mode).success;
}

}  // namespace

std::vector<DischargeInstance> discharge_corpus(int k, int random_count) {
  default_mode(k);
  const Graph clique = complete_graph(k - 1);
  const Graph chain = extremal_chain(k, 1);
  std::vector<DischargeInstance> out;
  auto add = [&](std::string name, const std::vector<Graph>& trees, const std::vector<HighAttachment>& highs) {
    Graph g = build_discharge_instance(k, trees, highs);
    if (!accepted(g, k)) throw CorrectnessFinding("corpus instance " + name + " fails its preconditions");
    out.push_back({std::move(name), std::move(g)});
  };
  add("clique-padded", {clique}, {});
  add("clique-one-double", {clique}, {HighAttachment{{{0, 0}, {0, 1}}}});
  add("clique-two-single", {clique}, {HighAttachment{{{0, 0}}}, HighAttachment{{{0, 1}}}});
  add("cycle-and-point", {cycle_graph(5), complete_graph(1)}, {HighAttachment{{{0, 0}, {1, 0}}}});
  add("chain-and-point", {chain, complete_graph(1)}, {HighAttachment{{{0, 1}, {1, 0}}}});
  add("two-cliques", {clique, clique},
      {HighAttachment{{{0, 0}, {1, 0}}}, HighAttachment{{{0, 1}, {0, 2}, {1, 1}}}});

  const std::vector<Graph> pool = enumerate_gallai_trees(k, 6);
  std::mt19937 rng(static_cast<unsigned>(1000 + k));
  int made = 0;
  for (int attempt = 0; made < random_count; ++attempt) {
    if (attempt > 100 * (random_count + 1)) throw CorrectnessFinding("random corpus generation stalled");
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<Graph> trees;
    const int tree_count = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<std::vector<int>> room;
    for (int i = 0; i < tree_count; ++i) {
      trees.push_back(pool[pick(rng)]);
      std::vector<int> r;
      for (Vertex v = 0; v < trees.back().order(); ++v) r.push_back((k - 1) - trees.back().degree(v));
      room.push_back(r);
    }
    std::vector<HighAttachment> highs(std::uniform_int_distribution<int>(0, 3)(rng));
    for (HighAttachment& h : highs) {
      bool doubled = false;
      for (int t = 0; t < tree_count; ++t) {
        const int want = std::uniform_int_distribution<int>(0, doubled ? 1 : 2)(rng);
        std::vector<Vertex> open;
        for (Vertex v = 0; v < trees[t].order(); ++v) {
          if (room[t][v] > 0) open.push_back(v);
        }
        std::shuffle(open.begin(), open.end(), rng);
        const int got = std::min<int>(want, static_cast<int>(open.size()));
        for (int i = 0; i < got; ++i) {
          h.targets.emplace_back(t, open[i]);
          --room[t][open[i]];
        }
        if (got == 2) doubled = true;
      }
    }
    Graph g = build_discharge_instance(k, trees, highs);
    if (!accepted(g, k)) continue;
    out.push_back({"random-" + std::to_string(made), std::move(g)});
    ++made;
  }
  return out;
}

}  // namespace critbound
