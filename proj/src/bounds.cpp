#include "critbound/bounds.hpp"

#include <map>
#include <string>

#include "critbound/errors.hpp"

namespace critbound {

namespace {

Rational q(long long num, long long den = 1) { return Rational(num, den); }

void require_k(int k, int lo, const char* what) {
  if (k < lo) {
    throw PreconditionError(std::string(what) + " requires k >= " + std::to_string(lo) +
                            ", got " + std::to_string(k));
  }
}

Condition make(int index, std::string statement, const Rational& lhs, const Rational& rhs,
               bool greater_equal) {
  Condition c;
  c.index = index;
  c.statement = std::move(statement);
  c.holds = greater_equal ? lhs >= rhs : lhs <= rhs;
  c.equality = lhs == rhs;
  return c;
}

// Reference values for cells without a closed form.
const std::map<int, std::string>& ks_list_values() {
  static const std::map<int, std::string> values{
      {9, "8.0838"}, {10, "9.0793"}, {15, "14.0610"}, {20, "19.0490"}};
  return values;
}

const std::map<int, std::string>& kr_small_values() {
  static const std::map<int, std::string> values{{5, "4.0984"}, {6, "5.1053"}};
  return values;
}

}  // namespace

BoundParams preset(Preset which, int k) {
  require_k(k, 4, "a bound preset");
  const long long kk = k;
  BoundParams bp;
  bp.k = k;
  bp.name = preset_name(which);
  switch (which) {
    case Preset::Gallai:
      bp.p = 1 + q(2, kk - 1);
      bp.f = -2;
      bp.h = 0;
      break;
    case Preset::KS: {
      const long long d = kk * kk - 3 * kk + 4;
      bp.p = q(4 * (kk - 1), d);
      bp.f = q(-4 * (kk * kk - 3 * kk + 2), d);
      bp.h = q(kk * kk - 3 * kk, d);
      break;
    }
    case Preset::SmallP: {
      const long long d = kk * kk - 4 * kk + 5;
      bp.p = q(3 * kk - 5, d);
      bp.f = q(-2 * (kk - 1) * (2 * kk - 5), d);
      bp.h = q(kk * (kk - 3), d);
      break;
    }
  }
  return bp;
}

Preset parse_preset(std::string_view name) {
  if (name == "gallai") return Preset::Gallai;
  if (name == "ks") return Preset::KS;
  if (name == "smallP" || name == "smallp") return Preset::SmallP;
  throw PreconditionError("unknown preset '" + std::string(name) + "' (gallai, ks, smallP)");
}

std::string preset_name(Preset which) {
  switch (which) {
    case Preset::Gallai: return "gallai";
    case Preset::KS: return "ks";
    case Preset::SmallP: return "smallP";
  }
  return "custom";
}

Rational g_family(int k, const Rational& c) {
  require_k(k, 4, "g_family");
  const Rational den = (k - c) * (k - 1) + (k - 3);
  if (den == 0) throw PreconditionError("g_family: degenerate denominator");
  return (k - 1) + Rational(k - 3) / den;
}

Rational alpha_k(int k) { return q(1, 2) - q(1, static_cast<long long>(k - 1) * (k - 2)); }

long long dirac_bound(int k, int n) {
  require_k(k, 4, "dirac_bound");
  if (n < 1) throw PreconditionError("dirac_bound requires n >= 1");
  return static_cast<long long>(k - 1) * n + k - 3;
}

long long ky_bound(int k, int n) {
  require_k(k, 4, "ky_bound");
  if (n < k) throw PreconditionError("ky_bound requires n >= k");
  const long long num = static_cast<long long>(k + 1) * (k - 2) * n - static_cast<long long>(k) * (k - 3);
  const long long den = 2LL * (k - 1);
  return (num + den - 1) / den;  // num > 0 for n >= k >= 4
}

Rational ky_asymptotic(int k) {
  require_k(k, 4, "ky_asymptotic");
  return q(static_cast<long long>(k + 1) * (k - 2), k - 1);
}

bool ConditionReport::all() const {
  for (const Condition& c : items) {
    if (!c.holds) return false;
  }
  return true;
}

std::vector<int> ConditionReport::failed() const {
  std::vector<int> out;
  for (const Condition& c : items) {
    if (!c.holds) out.push_back(c.index);
  }
  return out;
}

const Condition& ConditionReport::at(int index) const {
  for (const Condition& c : items) {
    if (c.index == index) return c;
  }
  throw PreconditionError("no condition with index " + std::to_string(index));
}

ConditionReport check_lemma31(const BoundParams& bp) {
  require_k(bp.k, 5, "check_lemma31");
  const int k = bp.k;
  ConditionReport r;
  r.items.push_back(make(1, "p >= -f/(k-2)", bp.p, -bp.f / (k - 2), true));
  r.items.push_back(make(2, "p >= -f/5 + 5 - k", bp.p, -bp.f / 5 + (5 - k), true));
  Condition c3;
  c3.index = 3;
  c3.statement = "0 >= f >= -k+2";
  c3.holds = bp.f <= 0 && bp.f >= Rational(2 - k);
  c3.equality = bp.f == 0 || bp.f == Rational(2 - k);
  r.items.push_back(c3);
  r.items.push_back(make(4, "p >= 3/(k-2)", bp.p, q(3, k - 2), true));
  return r;
}

ConditionReport check_lemma32(const BoundParams& bp) {
  require_k(bp.k, 5, "check_lemma32");
  const int k = bp.k;
  ConditionReport r;
  r.items.push_back(make(1, "f >= (k-1)(1-p-h)", bp.f, (k - 1) * (1 - bp.p - bp.h), true));
  r.items.push_back(make(2, "p >= 3/(k-2)", bp.p, q(3, k - 2), true));
  r.items.push_back(make(3, "p >= h + 5 - k", bp.p, bp.h + (5 - k), true));
  r.items.push_back(make(4, "p >= (2+h)/(k-2)", bp.p, (2 + bp.h) / (k - 2), true));
  r.items.push_back(make(5, "(k-1)p + (k-3)h >= k+1", (k - 1) * bp.p + (k - 3) * bp.h,
                         Rational(k + 1), true));
  return r;
}

ConditionReport check_thm41(const BoundParams& bp) {
  if (bp.k < 7) throw PreconditionError("check_thm41 requires k >= 7");
  ConditionReport r = check_lemma32(bp);
  r.items.push_back(make(6, "2(h+1) + f <= 0", 2 * (bp.h + 1) + bp.f, Rational(0), false));
  r.items.push_back(make(7, "p + (k-5)h <= k+1", bp.p + (bp.k - 5) * bp.h, Rational(bp.k + 1), false));
  return r;
}

ConditionReport check_thm43(const BoundParams& bp) {
  if (bp.k != 5 && bp.k != 6) throw PreconditionError("check_thm43 requires k in {5,6}");
  ConditionReport r = check_lemma32(bp);
  r.items.push_back(make(6, "h + 1 + f <= 0", bp.h + 1 + bp.f, Rational(0), false));
  r.items.push_back(make(7, "p + (k-5)h <= k+1", bp.p + (bp.k - 5) * bp.h, Rational(bp.k + 1), false));
  return r;
}

Rational tree_bound_rhs(const BoundParams& bp, int n, int q_count) {
  if (n < 1) throw PreconditionError("tree_bound_rhs requires n >= 1");
  if (q_count < 0) throw PreconditionError("tree_bound_rhs requires q >= 0");
  return (bp.k - 3 + bp.p) * n + bp.f + bp.h * q_count;
}

Rational main_bound(int k, MainVariant variant, const BoundParams& bp) {
  if (bp.k != k) throw PreconditionError("parameter tuple was built for a different k");
  if (variant == MainVariant::Auto) {
    if (k == 5 || k == 6) {
      variant = MainVariant::Thm43;
    } else if (k >= 7) {
      variant = MainVariant::Thm41;
    } else {
      throw PreconditionError("main_bound requires k >= 5");
    }
  }
  const ConditionReport report = variant == MainVariant::Thm41 ? check_thm41(bp) : check_thm43(bp);
  if (!report.all()) {
    std::string msg = "main_bound: conditions failed:";
    for (int i : report.failed()) msg += " (" + std::to_string(i) + ")";
    throw PreconditionError(msg);
  }
  const int weight = variant == MainVariant::Thm41 ? 3 : 4;
  return (k - 1) + (2 - bp.p) / (k + 2 + weight * bp.h - bp.p);
}

Rational smallp_closed_form_symmetric(int k) {
  const long long kk = k;
  return (kk - 1) + q((kk - 3) * (2 * kk - 5), kk * kk * kk + kk * kk - 15 * kk + 15);
}

Rational smallp_closed_form_lopsided(int k) {
  const long long kk = k;
  return (kk - 1) + q((kk - 3) * (2 * kk - 5), kk * kk * kk + 2 * kk * kk - 18 * kk + 15);
}

Rational kr_closed_form(int k) {
  const long long kk = k;
  return (kk - 1) + q(2 * (kk - 2) * (kk - 3), (kk - 1) * (kk * kk + 3 * kk - 12));
}

Rational gallai_closed_form(int k) {
  const long long kk = k;
  return (kk - 1) + q(kk - 3, kk * kk - 3);
}

std::string column_name(Table1Column c) {
  switch (c) {
    case Table1Column::Gallai: return "gallai";
    case Table1Column::Kriv: return "kriv";
    case Table1Column::KSCritical: return "ks_critical";
    case Table1Column::KY: return "ky";
    case Table1Column::KSList: return "ks_list";
    case Table1Column::KR: return "kr";
    case Table1Column::Here: return "here";
  }
  return "?";
}

Table1Row table1_row(int k) {
  require_k(k, 4, "table1");
  Table1Row row;
  row.k = k;
  auto computed = [&](Table1Column c, const Rational& value, Rounding mode = Rounding::HalfUp) {
    Table1Cell& cell = row.cells[static_cast<int>(c)];
    cell.present = true;
    cell.exact = value;
    cell.display = to_fixed(value, 4, mode);
  };
  auto tabulated = [&](Table1Column c, const std::string& value) {
    Table1Cell& cell = row.cells[static_cast<int>(c)];
    cell.present = true;
    cell.tabulated = true;
    cell.display = value;
  };
  for (Table1Cell& cell : row.cells) cell.display = "---";

  computed(Table1Column::Gallai, g_family(k, 0));
  computed(Table1Column::Kriv, g_family(k, 2));
  if (k >= 6) computed(Table1Column::KSCritical, g_family(k, (k - 5) * alpha_k(k)));
  computed(Table1Column::KY, ky_asymptotic(k));
  if (auto it = ks_list_values().find(k); it != ks_list_values().end()) {
    tabulated(Table1Column::KSList, it->second);
  }
  if (k >= 7) {
    computed(Table1Column::KR, main_bound(k, MainVariant::Thm41, preset(Preset::KS, k)));
  } else if (auto it = kr_small_values().find(k); it != kr_small_values().end()) {
    tabulated(Table1Column::KR, it->second);
  }
  if (k >= 5) {
    computed(Table1Column::Here, main_bound(k, MainVariant::Auto, preset(Preset::SmallP, k)),
             Rounding::Floor);
  }
  return row;
}

std::vector<Table1Row> table1(const std::vector<int>& ks) {
  std::vector<Table1Row> rows;
  rows.reserve(ks.size());
  for (int k : ks) rows.push_back(table1_row(k));
  return rows;
}

}  // namespace critbound
