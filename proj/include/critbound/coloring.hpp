#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critbound/graph.hpp"

namespace critbound {

/// Per-vertex list sizes or token counts.
using FVector = std::vector<int>;
/// One list of colors per vertex.
using ListAssignment = std::vector<std::vector<int>>;

FVector constant_f(const Graph& g, int value);
/// f(v) = d(v)
FVector degree_f(const Graph& g);

/// Explicit limits for the exhaustive deciders; exceeding any of them
/// throws BudgetExceeded.
struct SearchBudget {
  int max_vertices = 0;
  int max_edges = 0;
  long long max_states = 0;
};

inline constexpr SearchBudget kChromaticBudget{40, 400, 50'000'000};
inline constexpr SearchBudget kChooseBudget{10, 45, 200'000'000};
inline constexpr SearchBudget kPaintBudget{12, 45, 20'000'000};
inline constexpr SearchBudget kEulerianBudget{40, 30, 100'000'000};
inline constexpr SearchBudget kATBudget{30, 40, 20'000'000};

bool is_k_colorable(const Graph& g, int k, const SearchBudget& budget = kChromaticBudget);
int chromatic_number(const Graph& g, const SearchBudget& budget = kChromaticBudget);
/// A proper coloring respecting the lists, if any.
std::optional<std::vector<int>> list_coloring(const Graph& g, const ListAssignment& lists);

struct ChoosabilityResult {
  bool choosable = false;
  /// Present when not choosable: an f-assignment with no proper coloring.
  std::optional<ListAssignment> bad_assignment;
};

ChoosabilityResult is_f_choosable(const Graph& g, const FVector& f,
                                  const SearchBudget& budget = kChooseBudget);

/// Online list coloring: does Painter win the Lister/Painter game with f
/// tokens per vertex?
bool is_f_paintable(const Graph& g, const FVector& f, const SearchBudget& budget = kPaintBudget);

struct Arc {
  Vertex from;
  Vertex to;
  bool operator==(const Arc&) const = default;
};

class Orientation {
 public:
  /// Throws PreconditionError unless arcs orient every edge exactly once.
  Orientation(Graph base, std::vector<Arc> arcs);
  /// Edge i of base.edges() points from its smaller to its larger end
  /// unless bit i of reversed is set.
  static Orientation from_mask(const Graph& base, std::uint64_t reversed);

  const Graph& base() const { return base_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const;
  std::vector<int> out_degrees() const;
  bool is_acyclic() const;

 private:
  Graph base_;
  std::vector<Arc> arcs_;
};

struct EulerianCounts {
  long long ee = 0;
  long long eo = 0;
};

/// Even / odd spanning eulerian subdigraphs, by arc-subset enumeration.
EulerianCounts ee_eo(const Orientation& d, const SearchBudget& budget = kEulerianBudget);
/// EE - EO as the coefficient of prod x_v^{outdeg(v)} in prod_{u->v} (x_u - x_v).
long long ee_eo_poly(const Orientation& d, const SearchBudget& budget = kEulerianBudget);

struct ATCertificate {
  Orientation orientation;
  long long ee = 0;
  long long eo = 0;
};

/// Throws CorrectnessFinding when the certificate is unsound.
void validate_certificate(const ATCertificate& cert, const FVector& f);

std::optional<ATCertificate> is_f_AT(const Graph& g, const FVector& f,
                                     const SearchBudget& budget = kATBudget);
int at_number(const Graph& g, const SearchBudget& budget = kATBudget);

struct ImplicationReport {
  bool at = false;
  bool paintable = false;
  bool choosable = false;
  bool consistent() const { return (!at || paintable) && (!paintable || choosable); }
};

/// Evaluates f-AT, f-paintable and f-choosable; throws CorrectnessFinding
/// if f-AT => f-paintable => f-choosable fails.
ImplicationReport implication_chain(const Graph& g, const FVector& f);

enum class Notion { Chromatic, List, Paint, AT };
Notion parse_notion(const std::string& name);
std::string notion_name(Notion n);

/// Is g f-colorable under the notion for f = colors everywhere? Without a
/// budget each engine uses its own default.
bool colorable_under(const Graph& g, Notion notion, int colors,
                     const std::optional<SearchBudget>& budget = std::nullopt);

bool is_k_critical(const Graph& g, int k);
bool is_k_list_critical(const Graph& g, int k);
bool is_k_AT_critical(const Graph& g, int k);
bool is_critical(const Graph& g, int k, Notion notion, const std::optional<SearchBudget>& budget = std::nullopt);

}  // namespace critbound
