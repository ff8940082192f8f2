#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "pricing/rational.hpp"

namespace pricing {

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

struct VariableBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

// Maximization problem over rational data. `bounds` may be empty, in
// which case every variable is free; otherwise it must have one entry
// per variable.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VariableBounds> bounds;

  std::size_t variable_count() const { return objective.size(); }
};

struct LpOptimum {
  Rational value;
  std::vector<Rational> point;
};
struct LpInfeasible {};
struct LpUnbounded {};

using LpResult = std::variant<LpOptimum, LpInfeasible, LpUnbounded>;

// Scale guard: the standard LP grows quadratically in the valuation grid,
// and these solvers are desk-scale by design.
struct LpLimits {
  std::size_t max_variables = 2048;
  std::size_t max_constraints = 8192;
};

// Exact two-phase primal simplex with Bland's rule. Deterministic for a
// fixed input; throws BudgetExceeded when the program is over the limits.
LpResult lp_solve(const LinearProgram& lp, const LpLimits& limits = {});

}  // namespace pricing
