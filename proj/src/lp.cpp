#include "pricing/lp.hpp"

#include <cassert>
#include <cstddef>
#include <utility>

namespace pricing {

namespace {

// How an original variable maps onto the nonnegative simplex variables.
struct Substitution {
  enum Kind { ShiftLower, FlipUpper, Free } kind;
  std::size_t col = 0;   // primary column
  std::size_t col2 = 0;  // negative part, Free only
  Rational offset;       // lower bound (ShiftLower) or upper bound (FlipUpper)
};

struct Tableau {
  // rows x (cols + 1); last entry of each row is the rhs.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> obj;  // reduced costs, size cols + 1 (last = -objective value)
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows[r];
    const Rational inv = Rational(1) / prow[c];
    for (auto& x : prow) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j) rows[i][j] -= f * prow[j];
    }
    if (obj[c] != 0) {
      const Rational f = obj[c];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * prow[j];
    }
    basis[r] = c;
  }

  // Bland's rule: entering = smallest eligible column with positive reduced
  // cost, leaving = min ratio with ties to the smallest basic variable.
  // Returns false when optimal, throws LpUnbounded via caller flag.
  enum class Step { Optimal, Pivoted, Unbounded };
  Step step(std::size_t eligible_cols) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < eligible_cols; ++j) {
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) return Step::Optimal;
    std::size_t leave = rows.size();
    Rational best_ratio;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][enter] <= 0) continue;
      Rational ratio = rows[i][cols] / rows[i][enter];
      if (leave == rows.size() || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows.size()) return Step::Unbounded;
    pivot(leave, enter);
    return Step::Pivoted;
  }
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp, const LpLimits& limits) {
  const std::size_t n = lp.variable_count();
  if (n > limits.max_variables || lp.constraints.size() > limits.max_constraints) {
    throw BudgetExceeded("linear program exceeds the configured size budget");
  }
  for (const auto& c : lp.constraints) assert(c.coeffs.size() == n);
  assert(lp.bounds.empty() || lp.bounds.size() == n);

  // Substitute each variable by nonnegative ones; bound pairs add a row.
  std::vector<Substitution> subst(n);
  std::vector<LinearConstraint> extra_rows;
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    VariableBounds b = lp.bounds.empty() ? VariableBounds{} : lp.bounds[j];
    if (b.lower && b.upper && *b.lower > *b.upper) return LpInfeasible{};
    if (b.lower) {
      subst[j] = {Substitution::ShiftLower, cols++, 0, *b.lower};
      if (b.upper) {
        LinearConstraint row;
        row.coeffs.assign(n, Rational(0));
        row.coeffs[j] = 1;
        row.rel = Relation::LessEq;
        row.rhs = *b.upper;
        extra_rows.push_back(std::move(row));
      }
    } else if (b.upper) {
      subst[j] = {Substitution::FlipUpper, cols++, 0, *b.upper};
    } else {
      subst[j] = {Substitution::Free, cols, cols + 1, Rational(0)};
      cols += 2;
    }
  }

  std::vector<LinearConstraint> all_rows = lp.constraints;
  all_rows.insert(all_rows.end(), extra_rows.begin(), extra_rows.end());
  const std::size_t m = all_rows.size();

  // Structural columns + one slack per inequality + one artificial per row.
  std::size_t slack_count = 0;
  for (const auto& r : all_rows)
    if (r.rel != Relation::Equal) ++slack_count;
  const std::size_t struct_cols = cols;
  const std::size_t total_cols = struct_cols + slack_count + m;

  Tableau t;
  t.cols = total_cols;
  t.rows.assign(m, std::vector<Rational>(total_cols + 1, Rational(0)));
  t.basis.assign(m, 0);

  std::size_t slack_at = struct_cols;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& src = all_rows[i];
    auto& row = t.rows[i];
    Rational rhs = src.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = src.coeffs[j];
      if (a == 0) continue;
      switch (subst[j].kind) {
        case Substitution::ShiftLower:
          row[subst[j].col] += a;
          rhs -= a * subst[j].offset;
          break;
        case Substitution::FlipUpper:
          row[subst[j].col] -= a;
          rhs -= a * subst[j].offset;
          break;
        case Substitution::Free:
          row[subst[j].col] += a;
          row[subst[j].col2] -= a;
          break;
      }
    }
    if (src.rel == Relation::LessEq) row[slack_at++] = 1;
    if (src.rel == Relation::GreaterEq) row[slack_at++] = -1;
    row[total_cols] = rhs;
    if (rhs < 0) {
      for (auto& x : row) x = -x;
    }
    const std::size_t art = struct_cols + slack_count + i;
    row[art] = 1;
    t.basis[i] = art;
  }

  // Phase 1: maximize -(sum of artificials).
  t.obj.assign(total_cols + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t art = struct_cols + slack_count + i;
    t.obj[art] = -1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    // Price out the basic artificials so reduced costs start consistent.
    for (std::size_t j = 0; j <= total_cols; ++j) t.obj[j] += t.rows[i][j];
  }
  while (true) {
    auto s = t.step(struct_cols + slack_count);
    if (s == Tableau::Step::Optimal) break;
    assert(s != Tableau::Step::Unbounded);  // phase-1 objective is bounded by 0
  }
  if (t.obj[total_cols] != 0) return LpInfeasible{};

  // Drive leftover artificials out of the basis; an all-zero row is
  // redundant and gets dropped.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < struct_cols + slack_count) {
      ++i;
      continue;
    }
    std::size_t c = struct_cols + slack_count;
    for (std::size_t j = 0; j < struct_cols + slack_count; ++j) {
      if (t.rows[i][j] != 0) {
        c = j;
        break;
      }
    }
    if (c < struct_cols + slack_count) {
      t.pivot(i, c);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2 over the original objective, artificial columns frozen.
  t.obj.assign(total_cols + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& c = lp.objective[j];
    if (c == 0) continue;
    switch (subst[j].kind) {
      case Substitution::ShiftLower:
        t.obj[subst[j].col] += c;
        break;
      case Substitution::FlipUpper:
        t.obj[subst[j].col] -= c;
        break;
      case Substitution::Free:
        t.obj[subst[j].col] += c;
        t.obj[subst[j].col2] -= c;
        break;
    }
  }
  // Price out the current basis.
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational f = t.obj[t.basis[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j <= total_cols; ++j) t.obj[j] -= f * t.rows[i][j];
  }
  while (true) {
    auto s = t.step(struct_cols + slack_count);
    if (s == Tableau::Step::Optimal) break;
    if (s == Tableau::Step::Unbounded) return LpUnbounded{};
  }

  std::vector<Rational> y(struct_cols, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < struct_cols) y[t.basis[i]] = t.rows[i][t.cols];
  }
  std::vector<Rational> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    switch (subst[j].kind) {
      case Substitution::ShiftLower:
        x[j] = subst[j].offset + y[subst[j].col];
        break;
      case Substitution::FlipUpper:
        x[j] = subst[j].offset - y[subst[j].col];
        break;
      case Substitution::Free:
        x[j] = y[subst[j].col] - y[subst[j].col2];
        break;
    }
  }
  Rational value(0);
  for (std::size_t j = 0; j < n; ++j) value += lp.objective[j] * x[j];
  return LpOptimum{std::move(value), std::move(x)};
}

}  // namespace pricing
