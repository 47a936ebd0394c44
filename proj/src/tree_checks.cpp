#include "critbound/tree_checks.hpp"

#include "critbound/bounds.hpp"
#include "critbound/errors.hpp"
#include "critbound/generators.hpp"
#include "critbound/structure.hpp"

namespace critbound {

bool TreeCheck::ok() const {
  return gallai_strict && gallai_refined && without_clique.value_or(true) && with_clique.value_or(true);
}

TreeCheck check_tree_bounds(const Graph& t, int k) {
  if (k < 5) throw PreconditionError("tree bound checks require k >= 5");
  if (!in_T_k(t, k)) throw PreconditionError("graph is not in T_k");
  TreeCheck c;
  c.order = t.order();
  c.twice_edges = 2 * t.edge_count();
  c.q = q_value(t, k);
  c.has_big_clique = contains_clique(t, k - 1);
  const Rational lhs(c.twice_edges);
  const Rational gallai = (Rational(k - 2) + Rational(2, k - 1)) * c.order;
  c.gallai_strict = lhs < gallai;
  c.gallai_refined = lhs <= gallai - 2;
  if (c.has_big_clique) {
    const Rational rhs = tree_bound_rhs(preset(Preset::SmallP, k), c.order, c.q);
    c.with_clique = lhs <= rhs;
    c.slack = rhs - lhs;
  } else {
    const BoundParams tight{k, Rational(3, k - 2), Rational(-3), Rational(0), "lemma31"};
    const Rational rhs = tree_bound_rhs(tight, c.order, 0);
    c.without_clique = lhs <= rhs;
    c.slack = rhs - lhs;
  }
  return c;
}

TreeVerification verify_trees(int k, int n_max) {
  TreeVerification out;
  out.k = k;
  out.n_max = n_max;
  out.per_order.assign(n_max + 1, 0);
  for_each_gallai_tree(k, n_max, [&](const Graph& t) {
    const TreeCheck c = check_tree_bounds(t, k);
    ++out.trees_checked;
    ++out.per_order[t.order()];
    if (c.slack == 0) ++out.tight;
    if (!c.ok()) out.violators.push_back(t);
  });
  return out;
}

}  // namespace critbound
