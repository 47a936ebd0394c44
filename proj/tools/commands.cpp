#include "commands.hpp"

#include <chrono>
#include <sstream>

#include "critbound/bounds.hpp"
#include "critbound/census.hpp"
#include "critbound/discharge.hpp"
#include "critbound/errors.hpp"
#include "critbound/generators.hpp"
#include "critbound/reducibility.hpp"
#include "critbound/structure.hpp"
#include "critbound/tree_checks.hpp"

namespace critbound::cli {

namespace {

Json vertices_json(VertexSet s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

Json condition_json(const ConditionReport& r) {
  Json items = Json::array();
  for (const Condition& c : r.items) {
    items.push_back({{"index", c.index}, {"statement", c.statement}, {"holds", c.holds}, {"equality", c.equality}});
  }
  return {{"all", r.all()}, {"failed", r.failed()}, {"items", items}};
}

Json budget_json(const SearchBudget& b, const std::string& status) {
  return {{"max_vertices", b.max_vertices}, {"max_edges", b.max_edges}, {"max_states", b.max_states},
          {"status", status}};
}

Result start(const std::string& command, const std::string& anchor) {
  Result r;
  r.doc["command"] = command;
  r.doc["anchor"] = anchor;
  r.doc["inputs"] = Json::object();
  r.doc["verdicts"] = Json::object();
  return r;
}

Json orientation_json(const Orientation& o) {
  Json arcs = Json::array();
  for (const Arc& a : o.arcs()) arcs.push_back({a.from, a.to});
  return {{"arcs", arcs}, {"out_degrees", o.out_degrees()}};
}

Json elimination_json(const EliminationResult& e) {
  Json order = Json::array();
  for (const EliminationStep& s : e.order) {
    order.push_back({{"side", s.side == EliminationStep::Side::Tree ? "tree" : "high"}, {"id", s.id}, {"pass", s.pass}});
  }
  Json out = {{"success", e.success}, {"order", order}};
  if (!e.success) {
    Json edges = Json::array();
    for (const auto& [y, t] : e.residual_edges) edges.push_back({y, t});
    out["residual"] = {{"trees", e.residual_trees}, {"high", vertices_json(e.residual_high)}, {"edges", edges}};
  }
  return out;
}

Json aux_json(const AuxiliaryBipartite& aux) {
  Json trees = Json::array();
  for (std::size_t t = 0; t < aux.trees.size(); ++t) {
    trees.push_back({{"vertices", vertices_json(aux.trees[t])}, {"w", vertices_json(aux.tree_w[t])}});
  }
  Json edges = Json::array();
  for (const auto& [y, t] : aux.edges) edges.push_back({y, t});
  return {{"trees", trees}, {"high", vertices_json(aux.high_side)}, {"edges", edges}};
}

Json ledger_json(const ChargeLedger& l) {
  Json initial = Json::array(), final = Json::array(), transfers = Json::array(), shares = Json::array();
  for (const Rational& r : l.initial) initial.push_back(rational_string(r));
  for (const Rational& r : l.final) final.push_back(rational_string(r));
  for (const Transfer& t : l.transfers) {
    transfers.push_back({{"rule", rule_name(t.rule)}, {"from", t.from}, {"to", t.to}, {"amount", rational_string(t.amount)}});
  }
  for (const ComponentShare& s : l.component_shares) {
    shares.push_back({{"component", s.component}, {"vertices", vertices_json(s.vertices)},
                      {"total", rational_string(s.total)}, {"each", rational_string(s.each)}});
  }
  return {{"initial", initial},
          {"transfers", transfers},
          {"final", final},
          {"component_shares", shares},
          {"total", rational_string(l.total_final())},
          {"replay_matches", l.replay() == l.final}};
}

Result finish(Result r, std::chrono::steady_clock::time_point began) {
  const auto elapsed = std::chrono::steady_clock::now() - began;
  r.doc["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return r;
}

}  // namespace

SearchBudget BudgetFlags::apply(SearchBudget base) const {
  if (max_vertices) base.max_vertices = *max_vertices;
  if (max_edges) base.max_edges = *max_edges;
  if (max_states) base.max_states = *max_states;
  return base;
}

std::string graph_text(const Graph& g) {
  return g.order() <= kMaxGraph6Order ? write_graph6(g) : write_edge_list(g);
}

FVector parse_f(const Graph& g, const std::string& spec) {
  if (spec == "d") return degree_f(g);
  if (spec == "d-1") {
    FVector f = degree_f(g);
    for (int& v : f) --v;
    return f;
  }
  FVector f;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      f.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad f value '" + item + "'");
    }
  }
  if (f.size() == 1) return constant_f(g, f[0]);
  if (static_cast<int>(f.size()) != g.order()) {
    throw PreconditionError("f lists " + std::to_string(f.size()) + " values for " + std::to_string(g.order()) +
                            " vertices");
  }
  return f;
}

Result analyze(const Graph& g, std::optional<int> k) {
  const auto began = std::chrono::steady_clock::now();
  Result r = start("analyze", "block structure, Gallai trees, W^k and q");
  r.doc["inputs"] = {{"graph", graph_text(g)}};
  if (k) r.doc["inputs"]["k"] = *k;
  Json& v = r.doc["verdicts"];
  v["order"] = g.order();
  v["edges"] = g.edge_count();
  std::vector<int> degrees;
  for (Vertex u = 0; u < g.order(); ++u) degrees.push_back(g.degree(u));
  v["degrees"] = degrees;
  if (g.order() > 0) v["average_degree"] = rational_string(Rational(2 * g.edge_count(), g.order()));
  v["connected"] = is_connected(g);
  Json comps = Json::array();
  for (VertexSet c : components(g)) comps.push_back(vertices_json(c));
  v["components"] = comps;
  if (is_connected(g)) {
    const BlockDecomposition b = block_decomposition(g);
    Json blocks = Json::array();
    for (VertexSet s : b.blocks) blocks.push_back(vertices_json(s));
    v["blocks"] = blocks;
    v["cut_vertices"] = vertices_json(b.cut_vertices);
    v["gallai_tree"] = is_gallai_tree(g);
  }
  if (k) {
    v["in_T_k"] = in_T_k(g, *k);
    v["w_k"] = vertices_json(w_k(g, *k));
    if (is_connected(g)) v["q"] = q_value(g, *k);
    if (*k >= 4) {
      const AuxiliaryBipartite aux = build_auxiliary(g, *k);
      v["auxiliary"] = aux_json(aux);
      v["elimination_symmetric"] = elimination_json(eliminate(aux, EliminationMode::Symmetric));
      v["elimination_lopsided"] = elimination_json(eliminate(aux, EliminationMode::Lopsided));
    }
  }
  return finish(std::move(r), began);
}

Result bounds(const std::vector<int>& ks, const std::string& preset_text, const std::string& format) {
  const auto began = std::chrono::steady_clock::now();
  const Preset which = parse_preset(preset_text);
  const std::vector<Table1Row> rows = table1(ks);
  if (format == "csv") {
    Result r;
    r.text = "k";
    for (Table1Column c : kTable1Columns) r.text += "," + column_name(c);
    r.text += "\n";
    for (const Table1Row& row : rows) {
      r.text += std::to_string(row.k);
      for (Table1Column c : kTable1Columns) r.text += "," + row.cell(c).display;
      r.text += "\n";
    }
    return r;
  }
  if (format != "json") throw PreconditionError("unknown format '" + format + "' (json, csv)");
  Result r = start("bounds", "average-degree lower bounds and their parameter hypotheses");
  r.doc["inputs"] = {{"k", ks}, {"preset", preset_name(which)}};
  Json out = Json::array();
  for (const Table1Row& row : rows) {
    Json entry = {{"k", row.k}};
    for (Table1Column c : kTable1Columns) {
      const Table1Cell& cell = row.cell(c);
      Json j = {{"display", cell.display}};
      if (cell.exact) j["exact"] = rational_string(*cell.exact);
      if (cell.tabulated) j["tabulated"] = true;
      entry[column_name(c)] = j;
    }
    if (row.k >= 5) {
      const BoundParams bp = preset(which, row.k);
      entry["params"] = {{"p", rational_string(bp.p)}, {"f", rational_string(bp.f)}, {"h", rational_string(bp.h)}};
      const ConditionReport report = row.k >= 7 ? check_thm41(bp) : check_thm43(bp);
      entry["conditions"] = condition_json(report);
      if (report.all()) {
        const Rational b = main_bound(row.k, MainVariant::Auto, bp);
        entry["main_bound"] = {{"exact", rational_string(b)}, {"display", to_fixed(b, 4, Rounding::Floor)}};
      }
    }
    out.push_back(entry);
  }
  r.doc["verdicts"]["rows"] = out;
  return finish(std::move(r), began);
}

Result verify_trees(int k, int n_max) {
  const auto began = std::chrono::steady_clock::now();
  Result r = start("verify-trees", "edge bounds for Gallai trees");
  r.doc["inputs"] = {{"k", k}, {"n_max", n_max}};
  const TreeVerification v = critbound::verify_trees(k, n_max);
  Json violators = Json::array();
  for (const Graph& g : v.violators) violators.push_back(graph_text(g));
  r.doc["verdicts"] = {{"trees_checked", v.trees_checked},
                       {"per_order", v.per_order},
                       {"tight", v.tight},
                       {"violations", v.violators.size()},
                       {"violators", violators}};
  r.exit = v.violators.empty() ? kVerified : kFalsified;
  return finish(std::move(r), began);
}

Result construct(const std::string& family, int k, int m) {
  const auto began = std::chrono::steady_clock::now();
  Graph g;
  std::string anchor;
  if (family == "extremal-chain") {
    g = extremal_chain(k, m);
    anchor = "extremal Gallai trees for the edge bound with K_{k-1}";
  } else if (family == "clique-path") {
    g = clique_path(k, m);
    anchor = "path of K_{k-1} copies linked by K_2";
  } else {
    throw PreconditionError("unknown family '" + family + "' (extremal-chain, clique-path)");
  }
  Result r = start("construct", anchor);
  r.doc["inputs"] = {{"family", family}, {"k", k}, {"m", m}};
  const int q = q_value(g, k);
  Json& v = r.doc["verdicts"];
  v["graph"] = graph_text(g);
  v["order"] = g.order();
  v["twice_edges"] = 2 * g.edge_count();
  v["q"] = q;
  v["in_T_k"] = in_T_k(g, k);
  if (k >= 5) {
    const Rational rhs = tree_bound_rhs(preset(Preset::SmallP, k), g.order(), q);
    v["smallp_rhs"] = rational_string(rhs);
    v["tight"] = rhs == 2 * g.edge_count();
  }
  return finish(std::move(r), began);
}

Result at(const Graph& g, const std::string& f_spec, const BudgetFlags& flags) {
  const auto began = std::chrono::steady_clock::now();
  const FVector f = parse_f(g, f_spec);
  const SearchBudget budget = flags.apply(kATBudget);
  Result r = start("at", "Alon-Tarsi orientations");
  r.doc["inputs"] = {{"graph", graph_text(g)}, {"f", f}};
  const auto cert = is_f_AT(g, f, budget);
  r.doc["verdicts"]["f_AT"] = cert.has_value();
  if (cert) {
    r.doc["verdicts"]["certificate"] = orientation_json(cert->orientation);
    r.doc["verdicts"]["certificate"]["ee"] = cert->ee;
    r.doc["verdicts"]["certificate"]["eo"] = cert->eo;
  }
  r.doc["budget"] = budget_json(budget, "ok");
  r.exit = cert ? kVerified : kFalsified;
  return finish(std::move(r), began);
}

Result choose(const Graph& g, const std::string& f_spec, const BudgetFlags& flags) {
  const auto began = std::chrono::steady_clock::now();
  const FVector f = parse_f(g, f_spec);
  const SearchBudget budget = flags.apply(kChooseBudget);
  Result r = start("choose", "list coloring");
  r.doc["inputs"] = {{"graph", graph_text(g)}, {"f", f}};
  const ChoosabilityResult res = is_f_choosable(g, f, budget);
  r.doc["verdicts"]["f_choosable"] = res.choosable;
  if (res.bad_assignment) r.doc["verdicts"]["bad_assignment"] = *res.bad_assignment;
  r.doc["budget"] = budget_json(budget, "ok");
  r.exit = res.choosable ? kVerified : kFalsified;
  return finish(std::move(r), began);
}

Result paint(const Graph& g, const std::string& f_spec, const BudgetFlags& flags) {
  const auto began = std::chrono::steady_clock::now();
  const FVector f = parse_f(g, f_spec);
  const SearchBudget budget = flags.apply(kPaintBudget);
  Result r = start("paint", "online list coloring");
  r.doc["inputs"] = {{"graph", graph_text(g)}, {"f", f}};
  const bool ok = is_f_paintable(g, f, budget);
  r.doc["verdicts"]["f_paintable"] = ok;
  r.doc["budget"] = budget_json(budget, "ok");
  r.exit = ok ? kVerified : kFalsified;
  return finish(std::move(r), began);
}

Result chi(const Graph& g, const BudgetFlags& flags) {
  const auto began = std::chrono::steady_clock::now();
  const SearchBudget budget = flags.apply(kChromaticBudget);
  Result r = start("chi", "chromatic number");
  r.doc["inputs"] = {{"graph", graph_text(g)}};
  const int c = chromatic_number(g, budget);
  r.doc["verdicts"]["chromatic_number"] = c;
  if (g.order() > 0) {
    std::vector<int> palette;
    for (int i = 0; i < c; ++i) palette.push_back(i);
    if (auto coloring = list_coloring(g, ListAssignment(g.order(), palette))) {
      r.doc["verdicts"]["coloring"] = *coloring;
    }
  }
  r.doc["budget"] = budget_json(budget, "ok");
  return finish(std::move(r), began);
}

Result critical(const Graph& g, int k, const std::string& notion_text, const BudgetFlags& flags) {
  const auto began = std::chrono::steady_clock::now();
  const Notion notion = parse_notion(notion_text);
  Result r = start("critical", "k-criticality under a coloring notion");
  r.doc["inputs"] = {{"graph", graph_text(g)}, {"k", k}, {"notion", notion_name(notion)}};
  const bool any = flags.max_vertices || flags.max_edges || flags.max_states;
  std::optional<SearchBudget> budget;
  if (any) {
    const SearchBudget base = notion == Notion::Chromatic ? kChromaticBudget
                              : notion == Notion::List    ? kChooseBudget
                              : notion == Notion::Paint   ? kPaintBudget
                                                          : kATBudget;
    budget = flags.apply(base);
  }
  const bool ok = is_critical(g, k, notion, budget);
  r.doc["verdicts"]["critical"] = ok;
  r.exit = ok ? kVerified : kFalsified;
  return finish(std::move(r), began);
}

Result discharge(const Graph& g, int k, const std::string& preset_text, const std::string& mode) {
  const auto began = std::chrono::steady_clock::now();
  const bool gallai = mode == "gallai" || (mode == "auto" && k == 4);
  if (gallai) {
    Result r = start("discharge", "Gallai's average-degree bound by discharging");
    r.doc["inputs"] = {{"graph", graph_text(g)}, {"k", k}, {"mode", "gallai"}};
    const GallaiDischargeReport rep = run_gallai_discharge(g, k);
    Json& v = r.doc["verdicts"];
    v["per_edge"] = rational_string(rep.per_edge);
    v["target"] = rational_string(rep.target);
    v["min_final"] = rational_string(rep.min_final);
    v["all_meet_target"] = rep.all_meet_target;
    v["ledger"] = ledger_json(rep.ledger);
    r.exit = rep.all_meet_target ? kVerified : kFalsified;
    return finish(std::move(r), began);
  }
  DischargeMode dm;
  if (mode == "auto") {
    dm = default_mode(k);
  } else if (mode == "symmetric") {
    dm = DischargeMode::Symmetric;
  } else if (mode == "lopsided") {
    dm = DischargeMode::Lopsided;
  } else {
    throw PreconditionError("unknown mode '" + mode + "' (auto, symmetric, lopsided, gallai)");
  }
  const DischargeParams params = make_params(k, preset(parse_preset(preset_text), k), dm);
  Result r = start("discharge", dm == DischargeMode::Symmetric ? "main average-degree bound, symmetric discharging"
                                                               : "main average-degree bound, lopsided discharging");
  r.doc["inputs"] = {{"graph", graph_text(g)}, {"k", k}, {"preset", preset_text}, {"mode", mode_name(dm)}};
  const MainDischargeReport rep = run_main_discharge(g, params);
  Json& v = r.doc["verdicts"];
  v["epsilon"] = rational_string(params.epsilon);
  v["gamma"] = rational_string(params.gamma);
  v["target"] = rational_string(params.target);
  v["auxiliary"] = aux_json(rep.aux);
  v["elimination"] = elimination_json(rep.elimination);
  v["eliminated"] = rep.eliminated;
  if (!rep.eliminated) {
    r.exit = kFalsified;
    return finish(std::move(r), began);
  }
  Json margins = Json::array();
  for (const Rational& m : rep.margin) margins.push_back(rational_string(m));
  v["margin"] = margins;
  v["min_final"] = rational_string(rep.min_final);
  v["all_meet_target"] = rep.all_meet_target;
  v["higher_ok"] = rep.higher_ok;
  Json kv = Json::array();
  for (const KVertexStats& s : rep.k_vertices) {
    kv.push_back({{"vertex", s.v}, {"gamma_sends", s.gamma_sends}, {"outflow", rational_string(s.outflow)},
                  {"cap", rational_string(s.cap)}, {"ok", s.ok}});
  }
  v["k_vertices"] = kv;
  Json sp = Json::array();
  for (const ComponentSponsorship& s : rep.sponsorship) {
    sp.push_back({{"component", s.component}, {"w_edges", s.w_edges}, {"without_gamma", s.without_gamma},
                  {"allowed", s.allowed}, {"ok", s.ok}});
  }
  v["sponsorship"] = sp;
  Json audits = Json::array();
  for (const TreeAudit& a : rep.audits) {
    audits.push_back({{"component", a.component}, {"order", a.order}, {"twice_edges", a.twice_edges}, {"q", a.q},
                      {"has_big_clique", a.has_big_clique}, {"A", rational_string(a.a)},
                      {"received", rational_string(a.received)}, {"required", rational_string(a.required)},
                      {"floor", rational_string(a.floor)}, {"ok", a.ok}});
  }
  v["audits"] = audits;
  v["ledger"] = ledger_json(rep.ledger);
  bool all_ok = rep.all_meet_target && rep.higher_ok;
  for (const auto& s : rep.k_vertices) all_ok = all_ok && s.ok;
  for (const auto& s : rep.sponsorship) all_ok = all_ok && s.ok;
  for (const auto& a : rep.audits) all_ok = all_ok && a.ok;
  r.exit = all_ok ? kVerified : kFalsified;
  return finish(std::move(r), began);
}

Result reduce_check(const Graph& g, int k, std::optional<int> x, const std::vector<int>& y_list,
                    const std::string& lemma, const BudgetFlags& flags) {
  const auto began = std::chrono::steady_clock::now();
  const SearchBudget budget = flags.apply(kReduceBudget);
  VertexSet y;
  for (int v : y_list) {
    if (v < 0 || v >= g.order()) throw PreconditionError("Y vertex " + std::to_string(v) + " is not in the graph");
    y.insert(v);
  }
  std::string which = lemma;
  if (which == "auto") which = x ? "single" : (k >= 7 ? "symmetric" : "lopsided");
  ReducibilityReport rep;
  if (which == "single") {
    if (!x) throw PreconditionError("the single check needs --x");
    rep = check_lemma51(g, *x, k, budget);
  } else if (which == "symmetric") {
    rep = check_lemma52(g, y, k, budget);
  } else if (which == "lopsided") {
    rep = check_lemma53(g, y, k, budget);
  } else {
    throw PreconditionError("unknown lemma '" + lemma + "' (auto, single, symmetric, lopsided)");
  }
  Result r = start("reduce-check", "reducible configuration: " + rep.lemma);
  r.doc["inputs"] = {{"graph", graph_text(g)}, {"k", k}, {"check", which}};
  if (x) r.doc["inputs"]["x"] = *x;
  if (!y_list.empty()) r.doc["inputs"]["y"] = vertices_json(y);
  Json hyps = Json::array();
  for (const Hypothesis& h : rep.hypotheses) {
    hyps.push_back({{"index", h.index}, {"statement", h.statement}, {"holds", h.holds}});
  }
  Json& v = r.doc["verdicts"];
  v["hypotheses"] = hyps;
  v["hypotheses_hold"] = rep.hypotheses_hold();
  v["f_AT"] = status_name(rep.status);
  if (rep.witness) {
    v["witness"] = vertices_json(*rep.witness);
    v["f"] = rep.f;
    if (rep.certificate) v["certificate"] = orientation_json(rep.certificate->orientation);
  }
  v["subsets_tested"] = rep.subsets_tested;
  v["subsets_skipped"] = rep.subsets_skipped;
  const bool over = rep.status == ATStatus::NotVerifiedBudget;
  r.doc["budget"] = budget_json(budget, over ? "exceeded" : "ok");
  if (over) r.doc["budget"]["note"] = rep.budget_note;
  r.exit = !rep.hypotheses_hold() ? kFalsified : over ? kBudget : kVerified;
  return finish(std::move(r), began);
}

Result census(std::istream& in, int k, const std::string& notion_text, const BudgetFlags& flags) {
  const auto began = std::chrono::steady_clock::now();
  const Notion notion = parse_notion(notion_text);
  const SearchBudget base = notion == Notion::Chromatic ? kChromaticBudget
                            : notion == Notion::List    ? kChooseBudget
                            : notion == Notion::Paint   ? kPaintBudget
                                                        : kATBudget;
  const SearchBudget budget = flags.apply(base);
  const CensusSummary s = critbound::census(in, k, notion, budget);
  Result r = start("census", "fewest edges in an n-vertex k-critical graph");
  r.doc["inputs"] = {{"k", k}, {"notion", notion_name(notion)}, {"records", s.records}};
  Json rows = Json::array();
  for (const auto& [n, row] : s.rows) {
    Json j = {{"n", n}, {"graphs", row.graphs}, {"critical", row.critical}, {"skipped", row.skipped}};
    if (row.min_edges) {
      j["min_edges"] = *row.min_edges;
      j["witness"] = graph_text(*row.witness);
    } else {
      j["min_edges"] = "none";
    }
    Json b = {{"dirac", row.bounds.dirac}, {"gallai", row.bounds.gallai}};
    if (row.bounds.ky) b["ky"] = *row.bounds.ky;
    if (row.bounds.main) b["main"] = *row.bounds.main;
    j["edge_bounds"] = b;
    rows.push_back(j);
  }
  r.doc["verdicts"] = {{"rows", rows}, {"skipped", s.skipped}};
  r.doc["budget"] = budget_json(budget, s.skipped ? "exceeded" : "ok");
  r.exit = s.skipped ? kBudget : kVerified;
  return finish(std::move(r), began);
}

}  // namespace critbound::cli
