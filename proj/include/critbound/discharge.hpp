#pragma once

#include <string>
#include <vector>

#include "critbound/bounds.hpp"
#include "critbound/graph.hpp"
#include "critbound/rational.hpp"
#include "critbound/structure.hpp"

namespace critbound {

enum class DischargeMode { Symmetric, Lopsided };
std::string mode_name(DischargeMode m);
/// Symmetric for k >= 7, lopsided for k in {5,6}.
DischargeMode default_mode(int k);

struct DischargeParams {
  int k = 0;
  BoundParams bp;
  DischargeMode mode = DischargeMode::Symmetric;
  Rational epsilon;
  Rational gamma;
  Rational target;  // k-1 + (2-p) epsilon
};

/// epsilon = 1/(k+2+3h-p) (symmetric) or 1/(k+2+4h-p) (lopsided),
/// gamma = epsilon (h+1); no hypothesis check.
DischargeParams discharge_constants(int k, const BoundParams& bp, DischargeMode mode);
/// As discharge_constants, after check_thm41 (symmetric) or check_thm43
/// (lopsided) passes; throws PreconditionError listing failures.
DischargeParams make_params(int k, const BoundParams& bp, DischargeMode mode);
/// 1 - (3 gamma + (k-3) epsilon) == epsilon (2-p), or the 4 gamma + (k-4)
/// epsilon form in lopsided mode.
bool k_vertex_identity_holds(const DischargeParams& params);

enum class Rule { R1, R2, R3ai, R3bi, R4Share, G1, G2 };
std::string rule_name(Rule r);

struct Transfer {
  Rule rule;
  Vertex from;
  Vertex to;
  Rational amount;
};

struct ComponentShare {
  int component = 0;
  VertexSet vertices;
  Rational total;
  Rational each;
};

struct ChargeLedger {
  std::vector<Rational> initial;
  std::vector<Transfer> transfers;
  std::vector<Rational> final;
  std::vector<ComponentShare> component_shares;

  /// initial + inflow - outflow, recomputed from the transfer log.
  std::vector<Rational> replay() const;
  Rational total_initial() const;
  Rational total_final() const;
};

struct GallaiDischargeReport {
  int k = 0;
  ChargeLedger ledger;
  Rational per_edge;  // (k-1)/(k^2-3)
  Rational target;    // k-1 + (k-3)/(k^2-3)
  Rational min_final;
  bool all_meet_target = false;
};

/// Requires min degree >= k-1 and every component of L(G) in T_k.
GallaiDischargeReport run_gallai_discharge(const Graph& g, int k);

struct TreeAudit {
  int component = 0;
  int order = 0;
  int twice_edges = 0;
  int q = 0;
  bool has_big_clique = false;
  Rational a;         // (k-1)|T| - 2||T|| - q(T)
  Rational received;  // inflow before sharing
  Rational required;  // eps A + gamma (q-2) (or q-1 lopsided); eps A without K_{k-1}
  Rational floor;     // eps (2-p) |T|
  bool ok = false;    // received >= required
};

/// A, q and floor for a standalone tree; received/required are left for
/// the caller when no ledger is at hand.
TreeAudit tree_charge_audit(const Graph& t, const DischargeParams& params);

struct KVertexStats {
  Vertex v = 0;
  int gamma_sends = 0;
  Rational outflow;
  Rational cap;  // 3 gamma + (k-3) eps, or 4 gamma + (k-4) eps
  bool ok = false;
};

struct ComponentSponsorship {
  int component = 0;
  int w_edges = 0;       // edges from W^k(T) to outside T
  int without_gamma = 0;
  int allowed = 0;       // 2 symmetric, 1 lopsided
  bool ok = false;
};

struct MainDischargeReport {
  DischargeParams params;
  bool eliminated = false;
  AuxiliaryBipartite aux;
  EliminationResult elimination;
  ChargeLedger ledger;  // empty when elimination failed
  std::vector<Rational> margin;  // final - target
  Rational min_final;
  bool all_meet_target = false;
  std::vector<KVertexStats> k_vertices;
  std::vector<ComponentSponsorship> sponsorship;
  std::vector<TreeAudit> audits;
  bool higher_ok = false;  // every (k+1)+-vertex ends >= (1-gamma) d(v)
};

/// Rules R1-R4. Elimination failure is reported, not thrown; the residual
/// is in elimination.
MainDischargeReport run_main_discharge(const Graph& g, const DischargeParams& params);

/// Synthetic host graph for discharge runs: the given trees, plus k-vertices
/// attached to chosen tree vertices, plus a padding clique that absorbs every
/// remaining degree deficit so pad vertices have degree >= k+1.
struct HighAttachment {
  std::vector<std::pair<int, Vertex>> targets;  // (tree index, vertex in that tree)
};
Graph build_discharge_instance(int k, const std::vector<Graph>& trees,
                               const std::vector<HighAttachment>& highs);

struct DischargeInstance {
  std::string name;
  Graph graph;
};

/// Hand-built instances plus `random_count` seeded random ones, all meeting
/// the preconditions of run_main_discharge under default_mode(k). k >= 5.
std::vector<DischargeInstance> discharge_corpus(int k, int random_count);

}  // namespace critbound
