#pragma once

#include <optional>
#include <vector>

#include "pricing/market.hpp"

namespace pricing {

// Per-valuation allocated item subset, parallel to the valuation grid
// order of enumerate_valuations.
struct AllocationMap {
  std::vector<Bundle> allocated;
};

// Pointwise-minimal nonnegative utilities satisfying every constraint
//   u_w >= u_v + sum_i (w_i - v_i) * x_{v,i}
// via longest-path relaxation; nullopt when a positive cycle makes the
// allocation infeasible.
std::optional<std::vector<Rational>> min_utilities(const ProductDistribution& dist,
                                                   const AllocationMap& alloc,
                                                   std::size_t grid_budget = 1u << 20);

std::optional<std::vector<Rational>> min_utilities_on_grid(
    const std::vector<WeightedValuation>& grid, const AllocationMap& alloc);

struct DrevResult {
  Rational revenue;
  AllocationMap alloc;
  std::vector<Rational> utilities;
};

struct DrevOptions {
  // Bound on (2^n)^|D|, the raw allocation-map count. Default admits
  // support-2 instances up to n = 3.
  Integer budget_allocations = Integer(1) << 24;
  unsigned workers = 1;
};

// Ground-truth optimal deterministic revenue by enumerating allocation
// maps; prices collapse to minimal feasible utilities. Deterministic
// witness for fixed input regardless of worker count.
DrevResult drev_bruteforce(const ProductDistribution& dist,
                           const DrevOptions& options = {});

struct LpBudget {
  std::size_t max_variables = 2048;
  std::size_t max_constraints = 8192;
};

// Optimal value of the standard LP (fractional allocations in [0,1]).
Rational rev_lp(const ProductDistribution& dist, const LpBudget& budget = {});

// Optimal value of the deduplicated symmetric LP for n i.i.d. items on
// support {1, b} with Pr[b] = p.
Rational symmetric_rev_lp(std::size_t n, const Rational& b, const Rational& p);

}  // namespace pricing
