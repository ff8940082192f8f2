#include "pricing/market.hpp"

#include <algorithm>
#include <cassert>

namespace pricing {

void ProductDistribution::validate() const {
  if (items.empty()) throw ParseError("distribution must have at least one item");
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& sup = items[i].support;
    if (sup.empty()) throw ParseError("item has empty support");
    Rational total(0);
    for (std::size_t j = 0; j < sup.size(); ++j) {
      if (sup[j].first < 0) throw ParseError("negative support value");
      if (sup[j].second <= 0 || sup[j].second > 1)
        throw ParseError("support probability outside (0,1]");
      if (j > 0 && !(sup[j - 1].first < sup[j].first))
        throw ParseError("support values must be strictly increasing");
      total += sup[j].second;
    }
    if (total != 1) throw ParseError("item probabilities do not sum to 1");
  }
}

Menu::Menu(std::vector<MenuEntry> entries) {
  for (auto& e : entries) {
    if (e.bundle == 0) throw ParseError("menu bundles must be nonempty");
    bool dup = false;
    for (const auto& kept : entries_) {
      if (kept.bundle == e.bundle && kept.price == e.price) {
        dup = true;
        break;
      }
    }
    if (!dup) entries_.push_back(std::move(e));
  }
}

Rational bundle_value(Bundle bundle, const Valuation& v) {
  Rational total(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (bundle & (Bundle{1} << i)) total += v[i];
  }
  return total;
}

BuyerChoice buyer_choice(const Menu& menu, const Valuation& v) {
  BuyerChoice best{std::nullopt, Rational(0), Rational(0)};
  for (std::size_t idx = 0; idx < menu.entries().size(); ++idx) {
    const auto& e = menu.entries()[idx];
    assert((e.bundle >> v.size()) == 0);
    Rational utility = bundle_value(e.bundle, v) - e.price;
    if (utility < 0) continue;
    const bool better =
        !best.chosen || utility > best.utility ||
        (utility == best.utility && e.price > best.price_paid);
    if (better) best = BuyerChoice{idx, std::move(utility), e.price};
  }
  return best;
}

std::vector<WeightedValuation> enumerate_valuations(const ProductDistribution& dist,
                                                    std::size_t budget) {
  const std::size_t n = dist.item_count();
  std::size_t grid = 1;
  for (const auto& item : dist.items) {
    if (item.support.empty() || grid > budget / item.support.size())
      throw BudgetExceeded("valuation grid exceeds the enumeration budget");
    grid *= item.support.size();
  }

  std::vector<WeightedValuation> out;
  out.reserve(grid);
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    WeightedValuation wv;
    wv.values.reserve(n);
    wv.prob = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [value, prob] = dist.items[i].support[idx[i]];
      wv.values.push_back(value);
      wv.prob *= prob;
    }
    out.push_back(std::move(wv));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < dist.items[i].support.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

Rational expected_revenue(const Menu& menu, const ProductDistribution& dist,
                          std::size_t budget) {
  Rational total(0);
  for (const auto& wv : enumerate_valuations(dist, budget)) {
    total += wv.prob * buyer_choice(menu, wv.values).price_paid;
  }
  return total;
}

Menu discounted_item_pricing_menu(const std::vector<Rational>& item_prices,
                                  const Rational& bundle_price) {
  const std::size_t n = item_prices.size();
  assert(n >= 1 && n < 32);
  std::vector<MenuEntry> entries;
  const Bundle grand = (Bundle{1} << n) - 1;
  for (Bundle b = 1; b <= grand; ++b) {
    Rational price(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (b & (Bundle{1} << i)) price += item_prices[i];
    }
    entries.push_back({b, std::move(price)});
  }
  entries.push_back({grand, bundle_price});
  return Menu(std::move(entries));
}

}  // namespace pricing
