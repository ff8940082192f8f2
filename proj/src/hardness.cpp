#include "pricing/hardness.hpp"

#include <algorithm>
#include <set>

#include "pricing/errors.hpp"

namespace pricing {

namespace {

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// Sum b over the next (n/2)-combination; returns false when exhausted.
bool next_combination(std::vector<std::size_t>& pick, std::size_t m) {
  const std::size_t d = pick.size();
  for (std::size_t i = d; i-- > 0;) {
    if (pick[i] + (d - i) < m) {
      ++pick[i];
      for (std::size_t j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Integer CompInstance::target() const {
  Integer w(0);
  for (auto i : w_indices) w += b[i];
  return w;
}

void CompInstance::validate() const {
  const std::size_t m = n();
  if (m == 0 || m % 2 != 0) throw ParseError("B must have a positive even size");
  const Integer cap = pow2(static_cast<unsigned long>(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0 || b[i] > cap) throw ParseError("B entries must lie in [0, 2^n]");
    if (i > 0 && b[i] < b[i - 1]) throw ParseError("B must be nondecreasing");
  }
  if (w_indices.size() != m / 2) throw ParseError("W must have size n/2");
  std::set<std::size_t> seen;
  for (auto i : w_indices) {
    if (i >= m) throw ParseError("W index out of range");
    if (!seen.insert(i).second) throw ParseError("W indices must be distinct");
  }
  if (t < 0) throw ParseError("t must be nonnegative");
}

void CompStarInstance::validate() const {
  inst.validate();
  const std::size_t m = inst.n();
  const Integer w = inst.target();
  Integer cond1(0);
  for (std::size_t i = 0; i + 1 < m / 2; ++i) cond1 += inst.b[i];
  cond1 += inst.b[m - 1];
  if (cond1 < w) throw ParseError("condition 1 violated: smallest half with b_n misses w");
  Integer cond2 = inst.b[1];
  for (std::size_t i = m / 2; i + 1 < m; ++i) cond2 += inst.b[i];
  if (cond2 >= w) throw ParseError("condition 2 violated: b_2 with the upper half reaches w");
}

CompStarInstance make_compstar(CompInstance inst) {
  CompStarInstance star{std::move(inst)};
  star.validate();
  return star;
}

std::pair<CompStarInstance, Integer> comp_to_compstar(const CompInstance& inst) {
  inst.validate();
  const std::size_t n = inst.n();
  const Integer base2n = pow2(static_cast<unsigned long>(2 * n));
  const Integer base3n = pow2(static_cast<unsigned long>(3 * n));
  const Integer base4n = pow2(static_cast<unsigned long>(4 * n));

  struct Tagged {
    Integer value;
    bool in_w;
  };
  std::vector<Tagged> entries;
  entries.reserve(4 * n);
  for (std::size_t i = 0; i + 1 < 3 * n / 2; ++i) entries.push_back({Integer(0), false});
  std::set<std::size_t> wset(inst.w_indices.begin(), inst.w_indices.end());
  for (std::size_t i = 0; i < n; ++i) entries.push_back({base2n + inst.b[i], wset.count(i) > 0});
  for (std::size_t i = 0; i < 3 * n / 2; ++i) entries.push_back({base3n, true});
  entries.push_back({base4n, false});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Tagged& x, const Tagged& y) { return x.value < y.value; });

  CompInstance out;
  out.b.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out.b.push_back(entries[i].value);
    if (entries[i].in_w) out.w_indices.push_back(i);
  }
  out.t = Integer(binomial(4 * n - 1, 2 * n - 1)) + inst.t;

  // Sanity: the target must match its closed form.
  Integer expect = Integer(3 * n / 2) * base3n + Integer(n / 2) * base2n + inst.target();
  if (out.target() != expect) {
    throw InternalConsistencyError("reduced target does not match its closed form");
  }
  Integer t_prime = out.t;
  return {make_compstar(std::move(out)), t_prime};
}

Integer count_tstar(const CompInstance& inst, const TstarBudget& budget) {
  inst.validate();
  const std::size_t n = inst.n();
  const std::size_t half = n / 2;
  if (Integer(binomial(n, half)) > budget.max_subsets) {
    throw BudgetExceeded("half-subset count exceeds budget");
  }
  const Integer w = inst.target();
  std::vector<std::size_t> pick(half);
  for (std::size_t i = 0; i < half; ++i) pick[i] = i;
  Integer count(0);
  do {
    Integer sum(0);
    for (auto i : pick) sum += inst.b[i];
    if (sum >= w) ++count;
  } while (next_combination(pick, n));
  return count;
}

HardInstance build_hard_instance(const CompStarInstance& star, const Integer& t) {
  // Only the shape is enforced here. The two structural conditions are
  // needed for the optimality argument, not the construction, and no
  // 2-element instance can satisfy condition 2 at all.
  star.inst.validate();
  HardInstance hi;
  hi.source = star.inst;
  hi.t = t;
  const std::size_t n = star.inst.n();
  hi.n = n;
  if (t < 1 || t > pow2(static_cast<unsigned long>(n))) {
    throw ParseError("t must lie in [1, 2^n]");
  }

  hi.h = Rational(pow2(static_cast<unsigned long>(2 * n)));
  hi.p = checked_div(Rational(1), 2 * (hi.h + 1));
  hi.delta = checked_div(Rational(1), Rational(pow2(static_cast<unsigned long>(3 * n))));
  hi.a.resize(n);
  hi.h_items.resize(n);
  Rational sum_a(0), sum_high(0);
  for (std::size_t i = 0; i < n; ++i) {
    hi.a[i] = Rational(star.inst.b[i]) * hi.delta;
    hi.h_items[i] = hi.h + hi.a[i];
    sum_a += hi.a[i];
    sum_high += hi.h_items[i] + 1;
  }
  hi.c = Rational(star.inst.target()) * hi.delta;
  hi.alpha = Rational(static_cast<long>(n / 2)) * hi.h + hi.c;
  hi.sigma = rational_pow(2 * (hi.h + 1), static_cast<long>(n));
  hi.tau = checked_div(hi.sigma, hi.sigma + hi.alpha);

  const Rational q = 1 - hi.p;
  hi.prob_gt_half = 0;
  for (std::size_t l = n / 2 + 1; l <= n; ++l) {
    hi.prob_gt_half += Rational(binomial(n, l)) * rational_pow(hi.p, static_cast<long>(l)) *
                       rational_pow(q, static_cast<long>(n - l));
  }
  const Rational full = Rational(static_cast<long>(n)) + hi.sigma + hi.alpha;
  hi.a_prime = full * (1 - hi.prob_gt_half) - sum_high * hi.p;
  hi.c_prime = full * (1 - hi.tau) * rational_pow(hi.p, static_cast<long>(n / 2)) *
               rational_pow(q, static_cast<long>(n / 2));
  hi.eps = checked_div(hi.c_prime * (Rational(t) - Rational(1, 2)) -
                           checked_div(hi.alpha * Rational(static_cast<long>(n)),
                                       2 * (hi.sigma + hi.alpha)) +
                           (1 - hi.tau) * hi.p * sum_a,
                       hi.a_prime);

  const Rational high_prob = hi.tau - hi.eps;
  if (!(high_prob > 0 && high_prob < 1)) {
    throw InternalConsistencyError("special-item probability left (0,1)");
  }

  for (std::size_t i = 0; i < n; ++i) {
    ItemDistribution item;
    item.support = {{Rational(1), q}, {hi.h_items[i] + 1, hi.p}};
    hi.dist.items.push_back(std::move(item));
  }
  ItemDistribution special;
  special.support = {{hi.sigma, 1 - high_prob}, {hi.sigma + hi.alpha, high_prob}};
  hi.dist.items.push_back(std::move(special));
  hi.dist.validate();
  return hi;
}

SolutionPair build_solutions(const HardInstance& hi, const TstarBudget& budget) {
  const std::size_t n = hi.n;
  SolutionPair sp{Rational(0),
                  Rational(0),
                  Menu({{static_cast<Bundle>((Bundle{1} << (n + 1)) - 1),
                         hi.sigma + Rational(static_cast<long>(n))}}),
                  Menu(),
                  Integer(0),
                  hi.a_prime,
                  Rational(0),
                  hi.c_prime};

  std::vector<Rational> item_prices;
  for (std::size_t i = 0; i < n; ++i) item_prices.push_back(hi.h_items[i] + 1);
  item_prices.push_back(hi.sigma + hi.alpha);
  const Rational full = Rational(static_cast<long>(n)) + hi.sigma + hi.alpha;
  sp.sol2_menu = discounted_item_pricing_menu(item_prices, full);

  sp.rev1 = Rational(static_cast<long>(n)) + hi.sigma;
  sp.t_star = count_tstar(hi.source, budget);

  const Rational q = 1 - hi.p;
  Rational sum_high(0);
  for (std::size_t i = 0; i < n; ++i) sum_high += hi.h_items[i] + 1;
  sp.rev_b_term = full * hi.tau + (1 - hi.tau) * sum_high * hi.p;

  // Low-sum sets R = { S : sum_{i in S} h_i < alpha }: every level below
  // n/2, none above, and at level n/2 exactly those with sum of b < w.
  Rational r_sum(0);
  for (std::size_t l = 1; l < n / 2; ++l) {
    r_sum += rational_pow(hi.p, static_cast<long>(l)) *
             rational_pow(q, static_cast<long>(n - l)) * Rational(binomial(n - 1, l - 1)) *
             sum_high;
  }
  {
    const Integer w = hi.source.target();
    std::vector<std::size_t> pick(n / 2);
    for (std::size_t i = 0; i < n / 2; ++i) pick[i] = i;
    Rational level_sum(0);
    do {
      Integer bsum(0);
      for (auto i : pick) bsum += hi.source.b[i];
      if (bsum < w) {
        for (auto i : pick) level_sum += hi.h_items[i] + 1;
      }
    } while (next_combination(pick, n));
    r_sum += rational_pow(hi.p, static_cast<long>(n / 2)) *
             rational_pow(q, static_cast<long>(n / 2)) * level_sum;
  }

  const Rational low_special = 1 - hi.tau + hi.eps;
  sp.rev2 = full * ((hi.tau - hi.eps) +
                    low_special * (hi.prob_gt_half +
                                   Rational(sp.t_star) *
                                       rational_pow(hi.p, static_cast<long>(n / 2)) *
                                       rational_pow(q, static_cast<long>(n / 2)))) +
            low_special * r_sum;
  return sp;
}

WinnerReport decide_winner(const SolutionPair& sp, const Integer& t) {
  if (sp.rev1 == sp.rev2) {
    throw InternalConsistencyError("the two candidate solutions tie exactly");
  }
  WinnerReport report;
  report.winner = sp.rev2 > sp.rev1 ? Winner::Solution2 : Winner::Solution1;
  report.residual =
      sp.rev2 - sp.rev1 - sp.c_prime * (Rational(sp.t_star) - Rational(t) + Rational(1, 2));
  return report;
}

}  // namespace pricing
