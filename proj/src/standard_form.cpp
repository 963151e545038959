#include "mpip/standard_form.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <unordered_map>

namespace mpip {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ColumnBounds {
  double lo = 0.0;
  double up = kInf;
  bool lo_explicit = false;
  bool fixed = false;
  double fixed_value = 0.0;
};

struct RowPlan {
  std::string name;
  RowType type;
  double anchor = 0.0;   // rhs of the standard-form equation
  int slack_coef = 0;    // 0 none, +1 slack, -1 surplus
  double slack_width = kInf;  // finite for ranged rows
};

}  // namespace

std::pair<StandardFormLP, VariableMap> to_standard_form(const MpsModel& model,
                                                        bool drop_zero_rows) {
  VariableMap map;

  // Per-column bounds in declaration order of the BOUNDS section.
  std::unordered_map<std::string, ColumnBounds> bounds;
  for (const auto& bnd : model.bounds) {
    ColumnBounds& cb = bounds[bnd.column];
    switch (bnd.type) {
      case BoundType::lower:
        cb.lo = *bnd.value;
        cb.lo_explicit = true;
        break;
      case BoundType::upper:
        if (*bnd.value < 0.0 && !cb.lo_explicit && cb.lo == 0.0) {
          // Convention inherited from classic readers: a negative upper
          // bound on a still-default column frees the lower bound.
          cb.lo = -kInf;
          map.warnings.push_back("negative upper bound on column '" +
                                 bnd.column +
                                 "' relaxes its lower bound to -inf");
        }
        cb.up = *bnd.value;
        break;
      case BoundType::fixed:
        if (cb.fixed && cb.fixed_value != *bnd.value)
          throw ModelError("conflicting FX bounds for column '" + bnd.column +
                           "'");
        cb.fixed = true;
        cb.fixed_value = *bnd.value;
        cb.lo = cb.up = *bnd.value;
        cb.lo_explicit = true;
        break;
      case BoundType::free:
        cb.lo = -kInf;
        cb.up = kInf;
        break;
      case BoundType::minus_infinity:
        cb.lo = -kInf;
        break;
      case BoundType::plus_infinity:
        cb.up = kInf;
        break;
    }
  }
  for (const auto& [name, cb] : bounds) {
    if (cb.lo > cb.up)
      throw ModelError("contradictory bounds for column '" + name + "': [" +
                       std::to_string(cb.lo) + ", " + std::to_string(cb.up) +
                       "]");
  }

  // Row plans: anchor rhs and slack shape per constraint row.
  std::vector<RowPlan> rows;
  std::unordered_map<std::string, int> row_index;
  for (const auto& row : model.rows) {
    if (row.type == RowType::objective) continue;
    RowPlan plan;
    plan.name = row.name;
    plan.type = row.type;
    const auto rhs_it = model.rhs.find(row.name);
    const double h = rhs_it == model.rhs.end() ? 0.0 : rhs_it->second;
    const auto rng_it = model.ranges.find(row.name);

    if (rng_it == model.ranges.end()) {
      plan.anchor = h;
      if (row.type == RowType::less_equal) plan.slack_coef = 1;
      if (row.type == RowType::greater_equal) plan.slack_coef = -1;
    } else {
      const double r = rng_it->second;
      // MPS ranges: L rows get [h - |r|, h], G rows [h, h + |r|], E rows
      // [h, h + r] for r >= 0 and [h - |r|, h] for r < 0.
      switch (row.type) {
        case RowType::less_equal:
          plan.anchor = h;
          plan.slack_coef = 1;
          plan.slack_width = std::abs(r);
          break;
        case RowType::greater_equal:
          plan.anchor = h;
          plan.slack_coef = -1;
          plan.slack_width = std::abs(r);
          break;
        case RowType::equality:
          plan.anchor = h;
          plan.slack_coef = r >= 0.0 ? -1 : 1;
          plan.slack_width = std::abs(r);
          break;
        case RowType::objective:
          break;
      }
    }
    row_index.emplace(plan.name, static_cast<int>(rows.size()));
    rows.push_back(std::move(plan));
  }
  if (model.ranges.count(model.objective_row))
    map.warnings.push_back("range on the objective row ignored");

  // Column layout: original variables first (split variables take two
  // columns), then row slacks, then the slacks of the upper-bound rows
  // (variables first, ranged-row slacks after).
  int next_col = 0;
  struct UpperBoundRow {
    int column;            // column being capped
    int negative_column;   // -1 unless the capped variable is split
    double width;
  };
  std::vector<UpperBoundRow> upper_rows;

  map.variables.reserve(model.column_order.size());
  for (const auto& name : model.column_order) {
    ColumnBounds cb;
    if (auto it = bounds.find(name); it != bounds.end()) cb = it->second;
    VariableMap::Entry entry;
    entry.name = name;
    if (cb.lo == -kInf) {
      entry.kind = VariableMap::Kind::split;
      entry.column = next_col++;
      entry.negative_column = next_col++;
      if (cb.up < kInf)
        upper_rows.push_back({entry.column, entry.negative_column, cb.up});
    } else {
      entry.kind = cb.lo == 0.0 ? VariableMap::Kind::direct
                                : VariableMap::Kind::shifted;
      entry.shift = cb.lo;
      entry.column = next_col++;
      if (cb.up < kInf)
        upper_rows.push_back({entry.column, -1, cb.up - cb.lo});
    }
    map.variables.push_back(std::move(entry));
  }

  for (auto& plan : rows) {
    if (plan.slack_coef != 0) {
      const int col = next_col++;
      map.row_slack_column.push_back(col);
      if (plan.slack_width < kInf) upper_rows.push_back({col, -1, plan.slack_width});
    } else {
      map.row_slack_column.push_back(-1);
    }
  }
  next_col += static_cast<int>(upper_rows.size());  // fresh slack per bound row
  const int n = next_col;
  const int m = static_cast<int>(rows.size() + upper_rows.size());
  if (n == 0 || m == 0)
    throw ModelError("model has no constraint rows or no columns");

  StandardFormLP lp;
  lp.m = m;
  lp.n = n;
  lp.a = MatrixF64(m, n);
  lp.b.assign(m, 0.0);
  lp.c.assign(n, 0.0);

  std::unordered_map<std::string, int> var_index;
  for (std::size_t i = 0; i < map.variables.size(); ++i)
    var_index.emplace(map.variables[i].name, static_cast<int>(i));

  for (std::size_t r = 0; r < rows.size(); ++r) lp.b[r] = rows[r].anchor;

  // Objective constant from an RHS entry on the objective row (minus sign by
  // the usual convention), plus the lower-bound shifts accumulated below.
  if (auto it = model.rhs.find(model.objective_row); it != model.rhs.end()) {
    map.objective_constant -= it->second;
    map.warnings.push_back("rhs entry on the objective row treated as an "
                           "objective constant");
  }

  std::unordered_map<std::string, RowType> row_types;
  for (const auto& row : model.rows) row_types.emplace(row.name, row.type);

  for (const auto& entry : model.columns) {
    const VariableMap::Entry& var = map.variables[var_index.at(entry.column)];
    if (entry.row == model.objective_row) {
      lp.c[var.column] += entry.value;
      if (var.kind == VariableMap::Kind::split)
        lp.c[var.negative_column] -= entry.value;
      map.objective_constant += entry.value * var.shift;
      continue;
    }
    if (row_types.at(entry.row) == RowType::objective) continue;  // ignored N row
    const int r = row_index.at(entry.row);
    lp.a(r, var.column) += entry.value;
    if (var.kind == VariableMap::Kind::split)
      lp.a(r, var.negative_column) -= entry.value;
    lp.b[r] -= entry.value * var.shift;
  }

  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].slack_coef != 0)
      lp.a(static_cast<int>(r), map.row_slack_column[r]) = rows[r].slack_coef;

  int bound_slack = n - static_cast<int>(upper_rows.size());
  for (std::size_t i = 0; i < upper_rows.size(); ++i) {
    const int r = static_cast<int>(rows.size() + i);
    lp.a(r, upper_rows[i].column) = 1.0;
    if (upper_rows[i].negative_column >= 0)
      lp.a(r, upper_rows[i].negative_column) = -1.0;
    lp.a(r, bound_slack) = 1.0;
    lp.b[r] = upper_rows[i].width;
    ++bound_slack;
  }

  map.n = n;
  map.column_kind.assign(n, VariableMap::Kind::slack);
  for (const auto& var : map.variables) {
    map.column_kind[var.column] = var.kind;
    if (var.kind == VariableMap::Kind::split)
      map.column_kind[var.negative_column] = var.kind;
  }
  for (const auto& plan : rows) map.row_names.push_back(plan.name);

  if (!all_finite(lp.a) || !all_finite(lp.b) || !all_finite(lp.c))
    throw ModelError("standard form has non-finite entries");

  if (drop_zero_rows) {
    std::vector<int> keep;
    for (int r = 0; r < lp.m; ++r) {
      bool zero = lp.b[r] == 0.0;
      for (int j = 0; zero && j < lp.n; ++j) zero = lp.a(r, j) == 0.0;
      if (!zero) keep.push_back(r);
    }
    if (static_cast<int>(keep.size()) < lp.m) {
      map.warnings.push_back(
          std::to_string(lp.m - keep.size()) + " zero rows dropped");
      MatrixF64 a2(static_cast<int>(keep.size()), lp.n);
      VectorF64 b2(keep.size());
      std::vector<std::string> names2;
      std::vector<int> slacks2;
      for (std::size_t i = 0; i < keep.size(); ++i) {
        const int r = keep[i];
        for (int j = 0; j < lp.n; ++j) a2(static_cast<int>(i), j) = lp.a(r, j);
        b2[i] = lp.b[r];
        if (r < static_cast<int>(map.row_names.size())) {
          names2.push_back(map.row_names[r]);
          slacks2.push_back(map.row_slack_column[r]);
        }
      }
      lp.a = std::move(a2);
      lp.b = std::move(b2);
      lp.m = static_cast<int>(keep.size());
      map.row_names = std::move(names2);
      map.row_slack_column = std::move(slacks2);
    }
  }

  for (const auto& w : model.warnings) map.warnings.push_back(w);
  return {std::move(lp), std::move(map)};
}

std::map<std::string, double> recover_original_solution(const VariableMap& map,
                                                        const VectorF64& x) {
  if (static_cast<int>(x.size()) != map.n)
    throw std::invalid_argument(
        "recover_original_solution: expected a vector of length " +
        std::to_string(map.n) + ", got " + std::to_string(x.size()));
  std::map<std::string, double> out;
  for (const auto& var : map.variables) {
    switch (var.kind) {
      case VariableMap::Kind::direct:
        out[var.name] = x[var.column];
        break;
      case VariableMap::Kind::shifted:
        out[var.name] = x[var.column] + var.shift;
        break;
      case VariableMap::Kind::split:
        out[var.name] = x[var.column] - x[var.negative_column];
        break;
      case VariableMap::Kind::slack:
        break;  // original variables are never slacks
    }
  }
  return out;
}

void dump_standard_form(std::ostream& out, const StandardFormLP& lp) {
  const auto flags = out.flags();
  out.precision(17);
  out << lp.m << ' ' << lp.n << '\n';
  for (int i = 0; i < lp.m; ++i) {
    for (int j = 0; j < lp.n; ++j) out << (j ? " " : "") << lp.a(i, j);
    out << '\n';
  }
  for (int i = 0; i < lp.m; ++i) out << (i ? " " : "") << lp.b[i];
  out << '\n';
  for (int j = 0; j < lp.n; ++j) out << (j ? " " : "") << lp.c[j];
  out << '\n';
  out.flags(flags);
}

}  // namespace mpip
