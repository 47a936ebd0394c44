#include <algorithm>
#include <map>
#include <unordered_map>

#include "critbound/coloring.hpp"
#include "critbound/errors.hpp"

namespace critbound {

Orientation::Orientation(Graph base, std::vector<Arc> arcs) : base_(std::move(base)), arcs_(std::move(arcs)) {
  if (static_cast<int>(arcs_.size()) != base_.edge_count()) {
    throw PreconditionError("orientation must direct every edge exactly once");
  }
  Graph seen(base_.order());
  for (const Arc& a : arcs_) {
    if (a.from < 0 || a.to < 0 || a.from >= base_.order() || a.to >= base_.order() ||
        !base_.has_edge(a.from, a.to) || seen.has_edge(a.from, a.to)) {
      throw PreconditionError("orientation arcs do not match the base graph");
    }
    seen.add_edge(a.from, a.to);
  }
}

Orientation Orientation::from_mask(const Graph& base, std::uint64_t reversed) {
  std::vector<Arc> arcs;
  int i = 0;
  for (const Edge& e : base.edges()) {
    arcs.push_back(((reversed >> i) & 1U) ? Arc{e.v, e.u} : Arc{e.u, e.v});
    ++i;
  }
  return Orientation(base, std::move(arcs));
}

int Orientation::out_degree(Vertex v) const {
  return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.from == v; }));
}

int Orientation::in_degree(Vertex v) const {
  return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.to == v; }));
}

std::vector<int> Orientation::out_degrees() const {
  std::vector<int> d(base_.order(), 0);
  for (const Arc& a : arcs_) ++d[a.from];
  return d;
}

bool Orientation::is_acyclic() const {
  std::vector<int> indeg(base_.order(), 0);
  for (const Arc& a : arcs_) ++indeg[a.to];
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < base_.order(); ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (const Arc& a : arcs_) {
      if (a.from == v && --indeg[a.to] == 0) ready.push_back(a.to);
    }
  }
  return removed == base_.order();
}

namespace {

// Arcs sorted so that each vertex sees its last arc as early as possible.
std::vector<Arc> closing_order(const Orientation& d) {
  std::vector<Arc> arcs = d.arcs();
  std::stable_sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::max(a.from, a.to) < std::max(b.from, b.to);
  });
  return arcs;
}

void check_edges(const Graph& g, const SearchBudget& budget, const char* what) {
  if (g.order() > budget.max_vertices || g.edge_count() > budget.max_edges) {
    throw BudgetExceeded(std::string(what) + ": graph exceeds the size budget (" +
                         std::to_string(budget.max_edges) + " edges)");
  }
}

}  // namespace

EulerianCounts ee_eo(const Orientation& d, const SearchBudget& budget) {
  check_edges(d.base(), budget, "ee_eo");
  const std::vector<Arc> arcs = closing_order(d);
  const int n = d.base().order();
  std::vector<int> balance(n, 0);
  std::vector<int> pending(n, 0);
  for (const Arc& a : arcs) {
    ++pending[a.from];
    ++pending[a.to];
  }
  EulerianCounts counts;
  long long states = 0;
  auto rec = [&](auto&& self, std::size_t i, int chosen) -> void {
    if (++states > budget.max_states) throw BudgetExceeded("ee_eo: state budget exhausted");
    if (i == arcs.size()) {
      (chosen % 2 == 0 ? counts.ee : counts.eo) += 1;
      return;
    }
    const Arc a = arcs[i];
    --pending[a.from];
    --pending[a.to];
    auto ok = [&](Vertex v) { return std::abs(balance[v]) <= pending[v]; };
    if (ok(a.from) && ok(a.to)) self(self, i + 1, chosen);
    ++balance[a.from];
    --balance[a.to];
    if (ok(a.from) && ok(a.to)) self(self, i + 1, chosen + 1);
    --balance[a.from];
    ++balance[a.to];
    ++pending[a.from];
    ++pending[a.to];
  };
  rec(rec, 0, 0);
  return counts;
}

long long ee_eo_poly(const Orientation& d, const SearchBudget& budget) {
  check_edges(d.base(), budget, "ee_eo_poly");
  const std::vector<Arc> arcs = closing_order(d);
  const std::vector<int> target = d.out_degrees();
  const int n = d.base().order();
  std::vector<int> pending(n, 0);
  for (const Arc& a : arcs) {
    ++pending[a.from];
    ++pending[a.to];
  }
  // exponent vector -> coefficient
  std::map<std::vector<int>, long long> poly{{std::vector<int>(n, 0), 1}};
  long long states = 0;
  for (const Arc& a : arcs) {
    --pending[a.from];
    --pending[a.to];
    std::map<std::vector<int>, long long> next;
    for (const auto& [exp, coef] : poly) {
      for (int side = 0; side < 2; ++side) {
        const Vertex v = side == 0 ? a.from : a.to;
        std::vector<int> e = exp;
        ++e[v];
        if (e[v] > target[v]) continue;
        // every vertex must still be able to reach its target exponent
        if (e[a.from] + pending[a.from] < target[a.from] || e[a.to] + pending[a.to] < target[a.to]) continue;
        if (++states > budget.max_states) throw BudgetExceeded("ee_eo_poly: state budget exhausted");
        next[e] += side == 0 ? coef : -coef;
      }
    }
    poly.clear();
    for (auto& [e, c] : next) {
      if (c != 0) poly.emplace(e, c);
    }
  }
  const auto it = poly.find(target);
  return it == poly.end() ? 0 : it->second;
}

void validate_certificate(const ATCertificate& cert, const FVector& f) {
  const Orientation& d = cert.orientation;
  if (static_cast<int>(f.size()) != d.base().order()) throw CorrectnessFinding("certificate: f has the wrong length");
  for (Vertex v = 0; v < d.base().order(); ++v) {
    if (d.out_degree(v) + 1 > f[v]) throw CorrectnessFinding("certificate: out-degree cap violated");
  }
  const EulerianCounts c = ee_eo(d, SearchBudget{kMaxVertices, 62, 1'000'000'000});
  if (c.ee != cert.ee || c.eo != cert.eo) throw CorrectnessFinding("certificate: EE/EO recount differs");
  if (c.ee == c.eo) throw CorrectnessFinding("certificate: EE equals EO");
}

namespace {

// Orientation with the given out-degrees, by backtracking over edges.
std::optional<Orientation> orient_with(const Graph& g, const std::vector<int>& outdeg) {
  const std::vector<Edge> edges = g.edges();
  std::vector<int> quota = outdeg;
  std::vector<int> pending(g.order(), 0);
  for (const Edge& e : edges) {
    ++pending[e.u];
    ++pending[e.v];
  }
  std::vector<Arc> arcs;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == edges.size()) return true;
    const Edge e = edges[i];
    --pending[e.u];
    --pending[e.v];
    for (int side = 0; side < 2; ++side) {
      const Vertex from = side == 0 ? e.u : e.v;
      const Vertex to = side == 0 ? e.v : e.u;
      if (quota[from] == 0) continue;
      --quota[from];
      if (quota[from] <= pending[from] && quota[to] <= pending[to]) {
        arcs.push_back({from, to});
        if (self(self, i + 1)) return true;
        arcs.pop_back();
      }
      ++quota[from];
    }
    ++pending[e.u];
    ++pending[e.v];
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return Orientation(g, arcs);
}

struct PackedKey {
  std::uint64_t hi = 0, lo = 0;
  bool operator==(const PackedKey&) const = default;
};

struct PackedHash {
  std::size_t operator()(const PackedKey& k) const {
    return std::hash<std::uint64_t>{}(k.hi * 0x9e3779b97f4a7c15ULL ^ k.lo);
  }
};

}  // namespace

std::optional<ATCertificate> is_f_AT(const Graph& g, const FVector& f, const SearchBudget& budget) {
  if (static_cast<int>(f.size()) != g.order()) throw PreconditionError("f must have one entry per vertex");
  check_edges(g, budget, "is_f_AT");
  const int n = g.order();
  std::vector<int> cap(n);
  int widest = 0;
  for (Vertex v = 0; v < n; ++v) {
    cap[v] = std::min(f[v] - 1, g.degree(v));
    if (cap[v] < 0) return std::nullopt;
    widest = std::max(widest, cap[v]);
  }
  int slot = 1;
  while ((1 << slot) <= widest) ++slot;
  while (64 % slot != 0) ++slot;  // slots never straddle the two words
  if (slot * n > 128) throw BudgetExceeded("is_f_AT: exponent vector does not fit the state key");

  auto get = [&](const PackedKey& k, Vertex v) -> int {
    const int bit = v * slot;
    const std::uint64_t word = bit < 64 ? k.lo : k.hi;
    const int off = bit % 64;
    return static_cast<int>((word >> off) & ((std::uint64_t{1} << slot) - 1));
  };
  auto bump = [&](PackedKey k, Vertex v) {
    const int bit = v * slot;
    (bit < 64 ? k.lo : k.hi) += std::uint64_t{1} << (bit % 64);
    return k;
  };

  std::vector<Edge> edges = g.edges();
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.v < b.v; });
  std::vector<int> pending(n, 0);
  int remaining = static_cast<int>(edges.size());
  for (const Edge& e : edges) {
    ++pending[e.u];
    ++pending[e.v];
  }
  int spare = 0;
  for (Vertex v = 0; v < n; ++v) spare += cap[v];
  if (spare < remaining) return std::nullopt;

  // coefficients of prod_{u<v} (x_u - x_v) restricted to exponents <= cap
  std::unordered_map<PackedKey, long long, PackedHash> poly{{PackedKey{}, 1}};
  long long states = 0;
  for (const Edge& e : edges) {
    --pending[e.u];
    --pending[e.v];
    --remaining;
    std::unordered_map<PackedKey, long long, PackedHash> next;
    next.reserve(poly.size() * 2);
    for (const auto& [key, coef] : poly) {
      for (int side = 0; side < 2; ++side) {
        const Vertex v = side == 0 ? e.u : e.v;
        if (get(key, v) >= cap[v]) continue;
        if (++states > budget.max_states) throw BudgetExceeded("is_f_AT: state budget exhausted");
        next[bump(key, v)] += side == 0 ? coef : -coef;
      }
    }
    poly.clear();
    for (const auto& [k, c] : next) {
      if (c == 0) continue;
      // can the remaining edges still be absorbed?
      int room = 0;
      for (Vertex v = 0; v < n && room < remaining; ++v) {
        if (pending[v] > 0) room += std::min(pending[v], cap[v] - get(k, v));
      }
      if (room >= remaining) poly.emplace(k, c);
    }
    if (poly.empty()) return std::nullopt;
  }

  // deterministic pick: lexicographically smallest out-degree vector
  std::optional<std::vector<int>> best;
  for (const auto& [k, c] : poly) {
    std::vector<int> d(n);
    for (Vertex v = 0; v < n; ++v) d[v] = get(k, v);
    if (!best || d < *best) best = d;
  }
  if (!best) return std::nullopt;
  auto d = orient_with(g, *best);
  if (!d) throw CorrectnessFinding("is_f_AT: no orientation realises a nonzero coefficient");
  const EulerianCounts counts = ee_eo(*d, SearchBudget{kMaxVertices, 62, 1'000'000'000});
  ATCertificate cert{*d, counts.ee, counts.eo};
  validate_certificate(cert, f);
  return cert;
}

int at_number(const Graph& g, const SearchBudget& budget) {
  if (g.order() == 0) return 0;
  for (int k = 1; k <= g.max_degree() + 1; ++k) {
    if (is_f_AT(g, constant_f(g, k), budget)) return k;
  }
  throw CorrectnessFinding("at_number: no value up to max degree + 1");
}

}  // namespace critbound
