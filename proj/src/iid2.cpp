#include "pricing/iid2.hpp"

#include "pricing/errors.hpp"

namespace pricing {

void Iid2Instance::validate() const {
  if (n == 0) throw ParseError("need at least one item");
  if (a < 0) throw ParseError("low value must be nonnegative");
  if (!(a < b)) throw ParseError("high value must exceed low value");
  if (!(p > 0 && p < 1)) throw ParseError("probability must lie in (0,1)");
}

ProductDistribution Iid2Instance::distribution() const {
  validate();
  ItemDistribution item;
  item.support = {{a, 1 - p}, {b, p}};
  ProductDistribution dist;
  dist.items.assign(n, item);
  return dist;
}

Menu Iid2Solution::menu(std::size_t n) const {
  std::vector<Rational> items(n, item_price);
  return discounted_item_pricing_menu(items, bundle_price);
}

std::vector<Rational> level_probabilities(std::size_t n, const Rational& p) {
  if (!(p > 0 && p < 1)) throw ParseError("probability must lie in (0,1)");
  std::vector<Rational> probs(n + 1);
  const Rational q = 1 - p;
  for (std::size_t i = 0; i <= n; ++i) {
    probs[i] = Rational(binomial(n, i)) * rational_pow(p, static_cast<long>(i)) *
               rational_pow(q, static_cast<long>(n - i));
  }
  return probs;
}

std::size_t find_k(std::size_t n, const Rational& b, const Rational& p) {
  if (!(b > 1)) throw ParseError("find_k expects a normalized instance with b > 1");
  auto probs = level_probabilities(n, p);
  std::vector<Rational> suffix(n + 2, Rational(0));
  for (std::size_t i = n + 1; i-- > 1;) suffix[i] = suffix[i + 1] + probs[i];

  std::size_t k = n + 1;
  bool seen_nonneg = false;
  for (std::size_t i = 0; i <= n; ++i) {
    Rational expr = Rational(static_cast<long>(n - i)) * probs[i] - (b - 1) * suffix[i + 1];
    const bool nonneg = expr >= 0;
    if (nonneg && !seen_nonneg) {
      k = i;
      seen_nonneg = true;
    } else if (!nonneg && seen_nonneg) {
      throw InternalConsistencyError("threshold expression changed sign more than once");
    }
  }
  if (k > n) throw InternalConsistencyError("threshold expression never turned nonnegative");
  return k;
}

Iid2Solution solve_iid2(const Iid2Instance& inst) {
  inst.validate();
  Iid2Solution sol;
  sol.level_probs = level_probabilities(inst.n, inst.p);

  if (inst.a == 0) {
    // Selling every item separately at its high value is optimal; the
    // grand bundle at n*b is a redundant entry with no discount.
    sol.k = inst.n;
    sol.item_price = inst.b;
    sol.bundle_price = Rational(static_cast<long>(inst.n)) * inst.b;
    sol.revenue = Rational(static_cast<long>(inst.n)) * inst.b * inst.p;
    return sol;
  }

  const Rational b_norm = inst.b / inst.a;
  const std::size_t k = find_k(inst.n, b_norm, inst.p);
  Rational revenue(0);
  Rational tail(0);
  for (std::size_t i = 1; i < k; ++i) {
    revenue += b_norm * Rational(static_cast<long>(i)) * sol.level_probs[i];
  }
  for (std::size_t i = k; i <= inst.n; ++i) tail += sol.level_probs[i];
  const Rational grand_norm =
      Rational(static_cast<long>(k)) * b_norm + Rational(static_cast<long>(inst.n - k));
  revenue += grand_norm * tail;

  sol.k = k;
  sol.item_price = inst.b;
  sol.bundle_price = inst.a * grand_norm;  // = k*b + (n-k)*a
  sol.revenue = inst.a * revenue;
  return sol;
}

}  // namespace pricing
