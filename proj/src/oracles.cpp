#include "pricing/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <thread>

#include "pricing/lp.hpp"

namespace pricing {

std::optional<std::vector<Rational>> min_utilities_on_grid(
    const std::vector<WeightedValuation>& grid, const AllocationMap& alloc) {
  const std::size_t m = grid.size();
  assert(alloc.allocated.size() == m);

  // Edge v -> w carries weight sum_i (w_i - v_i) * x_{v,i}; the minimal
  // feasible utilities are longest paths from a zero source.
  std::vector<std::vector<Rational>> weight(m, std::vector<Rational>(m));
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t w = 0; w < m; ++w) {
      if (v == w) continue;
      Rational acc(0);
      const Bundle x = alloc.allocated[v];
      for (std::size_t i = 0; i < grid[v].values.size(); ++i) {
        if (x & (Bundle{1} << i)) acc += grid[w].values[i] - grid[v].values[i];
      }
      weight[v][w] = std::move(acc);
    }
  }

  std::vector<Rational> u(m, Rational(0));
  bool changed = true;
  for (std::size_t round = 0; round < m && changed; ++round) {
    changed = false;
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t w = 0; w < m; ++w) {
        if (v == w) continue;
        Rational cand = u[v] + weight[v][w];
        if (cand > u[w]) {
          u[w] = std::move(cand);
          changed = true;
        }
      }
    }
  }
  if (changed) {
    // One more sweep; any further improvement means a positive cycle.
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t w = 0; w < m; ++w) {
        if (v != w && u[v] + weight[v][w] > u[w]) return std::nullopt;
      }
    }
  }
  return u;
}

std::optional<std::vector<Rational>> min_utilities(const ProductDistribution& dist,
                                                   const AllocationMap& alloc,
                                                   std::size_t grid_budget) {
  return min_utilities_on_grid(enumerate_valuations(dist, grid_budget), alloc);
}

namespace {

// Depth-first enumeration of allocation maps with two exact prunes:
// pairwise weak monotonicity (a necessary feasibility condition) and a
// welfare-based revenue upper bound against the incumbent.
class DrevSearch {
 public:
  DrevSearch(const std::vector<WeightedValuation>& grid, std::size_t n)
      : grid_(grid), m_(grid.size()), subsets_(std::size_t{1} << n) {
    value_.assign(m_, std::vector<Rational>(subsets_));
    for (std::size_t g = 0; g < m_; ++g) {
      for (Bundle x = 0; x < subsets_; ++x) {
        Rational acc(0);
        for (std::size_t i = 0; i < n; ++i) {
          if (x & (Bundle{1} << i)) acc += grid[g].values[i];
        }
        value_[g][x] = std::move(acc);
      }
    }
    // Search high-welfare valuations first; their allocations constrain
    // the rest the most, and good incumbents appear early.
    order_.resize(m_);
    for (std::size_t g = 0; g < m_; ++g) order_[g] = g;
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      const Rational& wa = value_[a][subsets_ - 1];
      const Rational& wb = value_[b][subsets_ - 1];
      if (wa != wb) return wa > wb;
      return a < b;
    });
    // Candidate bundles at every position are tried in decreasing value
    // order (ties toward the smaller bundle) for the valuation searched.
    sorted_candidates_.assign(m_, {});
    for (std::size_t g = 0; g < m_; ++g) {
      auto& list = sorted_candidates_[g];
      list.resize(subsets_);
      for (Bundle x = 0; x < subsets_; ++x) list[x] = x;
      std::stable_sort(list.begin(), list.end(),
                       [&](Bundle a, Bundle b) { return value_[g][a] > value_[g][b]; });
    }
    suffix_welfare_.assign(m_ + 1, Rational(0));
    for (std::size_t pos = m_; pos-- > 0;) {
      suffix_welfare_[pos] =
          suffix_welfare_[pos + 1] + grid[order_[pos]].prob * value_[order_[pos]][subsets_ - 1];
    }
  }

  // Explore only the top-level branches with index % stride == offset.
  void run(std::size_t offset, std::size_t stride) {
    chosen_.assign(m_, 0);
    lower_utility_.assign(m_, Rational(0));
    for (std::size_t b = offset; b < candidate_count(0); b += stride) {
      descend(0, b, Rational(0), b);
    }
  }

  bool found() const { return found_; }
  std::size_t best_branch() const { return best_branch_; }
  const Rational& best_revenue() const { return best_revenue_; }
  DrevResult take_result() {
    return DrevResult{best_revenue_, AllocationMap{best_alloc_}, best_utilities_};
  }

 private:
  std::size_t candidate_count(std::size_t) const { return subsets_; }

  Bundle candidate(std::size_t pos, std::size_t rank) const {
    return sorted_candidates_[order_[pos]][rank];
  }

  void descend(std::size_t pos, std::size_t rank, Rational partial, std::size_t branch) {
    const std::size_t g = order_[pos];
    const Bundle x = candidate(pos, rank);

    // Pairwise weak monotonicity against every assigned valuation:
    // (v - w) . (x_v - x_w) >= 0, else a positive 2-cycle exists.
    Rational lb(0);
    for (std::size_t prev = 0; prev < pos; ++prev) {
      const std::size_t w = order_[prev];
      const Bundle xw = chosen_[prev];
      Rational diff = value_[g][x] - value_[w][x] - value_[g][xw] + value_[w][xw];
      if (diff < 0) return;
      Rational cand = lower_utility_[prev] + value_[g][xw] - value_[w][xw];
      if (cand > lb) lb = std::move(cand);
    }

    chosen_[pos] = x;
    lower_utility_[pos] = lb;
    Rational next_partial = partial + grid_[g].prob * (value_[g][x] - lb);

    if (pos + 1 == m_) {
      finish_leaf(next_partial, branch);
      return;
    }
    if (found_ && next_partial + suffix_welfare_[pos + 1] <= best_revenue_) return;
    for (std::size_t r = 0; r < candidate_count(pos + 1); ++r) {
      descend(pos + 1, r, next_partial, branch);
    }
  }

  void finish_leaf(const Rational& bound, std::size_t branch) {
    if (found_ && bound <= best_revenue_) return;
    AllocationMap alloc;
    alloc.allocated.assign(m_, 0);
    for (std::size_t pos = 0; pos < m_; ++pos) alloc.allocated[order_[pos]] = chosen_[pos];
    auto utilities = min_utilities_on_grid(grid_, alloc);
    if (!utilities) return;
    Rational revenue(0);
    for (std::size_t gidx = 0; gidx < m_; ++gidx) {
      revenue += grid_[gidx].prob * (value_[gidx][alloc.allocated[gidx]] - (*utilities)[gidx]);
    }
    if (!found_ || revenue > best_revenue_) {
      found_ = true;
      best_revenue_ = std::move(revenue);
      best_alloc_ = std::move(alloc.allocated);
      best_utilities_ = std::move(*utilities);
      best_branch_ = branch;
    }
  }

  const std::vector<WeightedValuation>& grid_;
  std::size_t m_;
  std::size_t subsets_;
  std::vector<std::vector<Rational>> value_;  // value_[g][bundle]
  std::vector<std::size_t> order_;
  std::vector<std::vector<Bundle>> sorted_candidates_;
  std::vector<Rational> suffix_welfare_;

  std::vector<Bundle> chosen_;
  std::vector<Rational> lower_utility_;

  bool found_ = false;
  Rational best_revenue_;
  std::vector<Bundle> best_alloc_;
  std::vector<Rational> best_utilities_;
  std::size_t best_branch_ = 0;
};

}  // namespace

DrevResult drev_bruteforce(const ProductDistribution& dist, const DrevOptions& options) {
  dist.validate();
  const std::size_t n = dist.item_count();
  if (n >= 20) throw BudgetExceeded("too many items for allocation-map enumeration");
  auto grid = enumerate_valuations(dist);

  Integer raw_count;
  mpz_ui_pow_ui(raw_count.get_mpz_t(), 1ul << n, static_cast<unsigned long>(grid.size()));
  if (raw_count > options.budget_allocations) {
    throw BudgetExceeded("allocation-map space exceeds --budget-allocations");
  }

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(options.workers, std::size_t{1} << n));
  if (workers == 1) {
    DrevSearch search(grid, n);
    search.run(0, 1);
    return search.take_result();
  }

  std::vector<DrevSearch> searches(workers, DrevSearch(grid, n));
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] { searches[w].run(w, workers); });
  }
  for (auto& th : threads) th.join();
  // Exact max-reduction; ties go to the earliest top-level branch, which
  // reproduces the sequential witness.
  std::size_t best = workers;
  for (std::size_t w = 0; w < workers; ++w) {
    if (!searches[w].found()) continue;
    if (best == workers || searches[w].best_revenue() > searches[best].best_revenue() ||
        (searches[w].best_revenue() == searches[best].best_revenue() &&
         searches[w].best_branch() < searches[best].best_branch())) {
      best = w;
    }
  }
  assert(best < workers);  // the all-empty allocation map is always feasible
  return searches[best].take_result();
}

Rational rev_lp(const ProductDistribution& dist, const LpBudget& budget) {
  dist.validate();
  const std::size_t n = dist.item_count();
  auto grid = enumerate_valuations(dist);
  const std::size_t m = grid.size();

  // Variables: x_{g,i} for g in [m), i in [n), then u_g for g in [m).
  const std::size_t vars = m * n + m;
  auto xvar = [&](std::size_t g, std::size_t i) { return g * n + i; };
  auto uvar = [&](std::size_t g) { return m * n + g; };

  LinearProgram lp;
  lp.objective.assign(vars, Rational(0));
  lp.bounds.assign(vars, VariableBounds{});
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t i = 0; i < n; ++i) {
      lp.objective[xvar(g, i)] = grid[g].prob * grid[g].values[i];
      lp.bounds[xvar(g, i)] = {Rational(0), Rational(1)};
    }
    lp.objective[uvar(g)] = -grid[g].prob;
    lp.bounds[uvar(g)] = {Rational(0), std::nullopt};
  }
  for (std::size_t w = 0; w < m; ++w) {
    for (std::size_t v = 0; v < m; ++v) {
      if (v == w) continue;
      LinearConstraint row;
      row.coeffs.assign(vars, Rational(0));
      row.coeffs[uvar(w)] = 1;
      row.coeffs[uvar(v)] = -1;
      for (std::size_t i = 0; i < n; ++i) {
        row.coeffs[xvar(v, i)] = grid[v].values[i] - grid[w].values[i];
      }
      row.rel = Relation::GreaterEq;
      row.rhs = 0;
      lp.constraints.push_back(std::move(row));
    }
  }

  auto result = lp_solve(lp, LpLimits{budget.max_variables, budget.max_constraints});
  auto* opt = std::get_if<LpOptimum>(&result);
  if (!opt) {
    throw InternalConsistencyError("standard LP must be feasible and bounded");
  }
  return opt->value;
}

Rational symmetric_rev_lp(std::size_t n, const Rational& b, const Rational& p) {
  if (!(b > 1)) throw ParseError("symmetric LP expects a normalized support {1, b} with b > 1");
  if (!(p > 0 && p < 1)) throw ParseError("probability must lie in (0,1)");

  // Variables: x_1..x_n, y_0..y_{n-1}, pi_0..pi_n. The dummy x_0 and y_n
  // never appear; their coefficients are dropped.
  const std::size_t vars = 3 * n + 1;
  auto xvar = [&](std::size_t l) { return l - 1; };           // l in [1, n]
  auto yvar = [&](std::size_t l) { return n + l; };           // l in [0, n-1]
  auto pivar = [&](std::size_t l) { return 2 * n + l; };      // l in [0, n]

  LinearProgram lp;
  lp.objective.assign(vars, Rational(0));
  lp.bounds.assign(vars, VariableBounds{});
  Rational q = 1 - p;
  for (std::size_t l = 0; l <= n; ++l) {
    Rational prob = Rational(binomial(n, l)) * rational_pow(p, static_cast<long>(l)) *
                    rational_pow(q, static_cast<long>(n - l));
    lp.objective[pivar(l)] = prob;
  }
  for (std::size_t l = 1; l <= n; ++l) lp.bounds[xvar(l)] = {Rational(0), Rational(1)};
  for (std::size_t l = 0; l < n; ++l) lp.bounds[yvar(l)] = {Rational(0), Rational(1)};

  // The utility a level-l valuation derives from the level-l' lottery when
  // j of its high-value positions coincide with the lottery valuation's.
  auto add_cross_utility = [&](std::vector<Rational>& row, std::size_t l, std::size_t lp_,
                               std::size_t j, int sign) {
    Rational xcoeff = b * Rational(static_cast<long>(j)) + Rational(static_cast<long>(lp_ - j));
    Rational ycoeff = b * Rational(static_cast<long>(l - j)) +
                      Rational(static_cast<long>(n - l - lp_ + j));
    if (lp_ >= 1 && xcoeff != 0) row[xvar(lp_)] += sign * xcoeff;
    if (lp_ <= n - 1 && ycoeff != 0) row[yvar(lp_)] += sign * ycoeff;
    row[pivar(lp_)] += Rational(-sign);
  };
  auto add_own_utility = [&](std::vector<Rational>& row, std::size_t l, int sign) {
    add_cross_utility(row, l, l, l, sign);
  };

  std::set<std::pair<std::vector<Rational>, Rational>> seen;
  auto push_row = [&](std::vector<Rational> coeffs) {
    if (!seen.insert({coeffs, Rational(0)}).second) return;
    LinearConstraint row;
    row.coeffs = std::move(coeffs);
    row.rel = Relation::GreaterEq;
    row.rhs = 0;
    lp.constraints.push_back(std::move(row));
  };

  for (std::size_t l = 0; l <= n; ++l) {
    std::vector<Rational> row(vars, Rational(0));
    add_own_utility(row, l, +1);
    push_row(std::move(row));  // IR at level l
  }
  for (std::size_t l = 0; l <= n; ++l) {
    for (std::size_t lp_ = 0; lp_ <= n; ++lp_) {
      const std::size_t jlo = (l + lp_ > n) ? l + lp_ - n : 0;
      const std::size_t jhi = std::min(l, lp_);
      for (std::size_t j = jlo; j <= jhi; ++j) {
        if (l == lp_ && j == l) continue;  // identical valuation
        std::vector<Rational> row(vars, Rational(0));
        add_own_utility(row, l, +1);
        add_cross_utility(row, l, lp_, j, -1);
        push_row(std::move(row));
      }
    }
  }

  auto result = lp_solve(lp);
  auto* opt = std::get_if<LpOptimum>(&result);
  if (!opt) throw InternalConsistencyError("symmetric LP must be feasible and bounded");
  return opt->value;
}

}  // namespace pricing
