#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critbound/rational.hpp"

namespace critbound {

/// The (p, f, h) triple used in the edge bound
///   2||T|| <= (k - 3 + p)|T| + f + h q(T)
/// for Gallai trees, and in the average-degree theorems built on it.
struct BoundParams {
  int k = 0;
  Rational p;
  Rational f;
  Rational h;
  std::string name = "custom";
};

enum class Preset { Gallai, KS, SmallP };

/// gallai: p = 1 + 2/(k-1), f = -2, h = 0.
/// ks:     p = 4(k-1)/(k^2-3k+4), f = -4(k^2-3k+2)/(k^2-3k+4), h = (k^2-3k)/(k^2-3k+4).
/// smallP: p = (3k-5)/(k^2-4k+5), f = -2(k-1)(2k-5)/(k^2-4k+5), h = k(k-3)/(k^2-4k+5).
BoundParams preset(Preset which, int k);
Preset parse_preset(std::string_view name);
std::string preset_name(Preset which);

/// Average-degree form k-1 + (k-3)/((k-c)(k-1)+k-3).
Rational g_family(int k, const Rational& c);
Rational alpha_k(int k);

/// Dirac: 2||G|| >= (k-1)n + k - 3.
long long dirac_bound(int k, int n);
/// Kostochka-Yancey: ||G|| >= ceil(((k+1)(k-2)n - k(k-3)) / (2(k-1))).
long long ky_bound(int k, int n);
/// (k+1)(k-2)/(k-1)
Rational ky_asymptotic(int k);

struct Condition {
  int index = 0;          // 1-based, matching the hypothesis list
  std::string statement;  // human-readable inequality
  bool holds = false;
  bool equality = false;  // holds with equality
};

struct ConditionReport {
  std::vector<Condition> items;

  bool all() const;
  std::vector<int> failed() const;
  const Condition& at(int index) const;  // by 1-based index
};

/// Hypotheses for the edge bound without K_{k-1}; needs k >= 5.
ConditionReport check_lemma31(const BoundParams& bp);
/// Hypotheses for the edge bound with K_{k-1}; needs k >= 5.
ConditionReport check_lemma32(const BoundParams& bp);
/// (1)-(5) of check_lemma32 plus 2(h+1)+f <= 0 and p+(k-5)h <= k+1; k >= 7.
ConditionReport check_thm41(const BoundParams& bp);
/// As check_thm41 but with h+1+f <= 0 in place of (6); k in {5,6}.
ConditionReport check_thm43(const BoundParams& bp);

/// (k-3+p)n + f + hq
Rational tree_bound_rhs(const BoundParams& bp, int n, int q);

enum class MainVariant { Thm41, Thm43, Auto };

/// k-1 + (2-p)/(k+2+3h-p) (thm41) or k-1 + (2-p)/(k+2+4h-p) (thm43).
/// Throws PreconditionError naming the failed conditions.
Rational main_bound(int k, MainVariant variant, const BoundParams& bp);

/// k-1 + (k-3)(2k-5)/(k^3+k^2-15k+15), the smallP bound for k >= 7.
Rational smallp_closed_form_symmetric(int k);
/// k-1 + (k-3)(2k-5)/(k^3+2k^2-18k+15), the smallP bound for k in {5,6}.
Rational smallp_closed_form_lopsided(int k);
/// k-1 + 2(k-2)(k-3)/((k-1)(k^2+3k-12)), the ks bound for k >= 7.
Rational kr_closed_form(int k);
/// k-1 + (k-3)/(k^2-3)
Rational gallai_closed_form(int k);

enum class Table1Column { Gallai, Kriv, KSCritical, KY, KSList, KR, Here };
inline constexpr std::array<Table1Column, 7> kTable1Columns{
    Table1Column::Gallai, Table1Column::Kriv, Table1Column::KSCritical, Table1Column::KY,
    Table1Column::KSList, Table1Column::KR,   Table1Column::Here};
std::string column_name(Table1Column c);

struct Table1Cell {
  bool present = false;
  std::optional<Rational> exact;  // empty for tabulated reference values
  std::string display;            // 4 decimals; "---" when absent
  bool tabulated = false;
};

struct Table1Row {
  int k = 0;
  std::array<Table1Cell, 7> cells;
  const Table1Cell& cell(Table1Column c) const { return cells[static_cast<int>(c)]; }
};

/// Display convention: the Here column is floored (it is a lower bound
/// stated to 4 places); every other column rounds half up.
Table1Row table1_row(int k);
std::vector<Table1Row> table1(const std::vector<int>& ks);

}  // namespace critbound
