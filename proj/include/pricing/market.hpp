#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pricing/rational.hpp"

namespace pricing {

// Items in a bundle are a bitmask over item indices 0..n-1.
using Bundle = std::uint32_t;

struct ItemDistribution {
  // (value, probability) pairs, values strictly increasing, probs in (0,1]
  // summing to exactly 1.
  std::vector<std::pair<Rational, Rational>> support;
};

struct ProductDistribution {
  std::vector<ItemDistribution> items;

  std::size_t item_count() const { return items.size(); }
  // Throws ParseError when an invariant is violated.
  void validate() const;
};

using Valuation = std::vector<Rational>;

struct MenuEntry {
  Bundle bundle = 0;
  Rational price;
};

// Finite list of (bundle, price) offers. Construction drops duplicate
// (bundle, price) pairs, keeping the first, so index tie-breaks are
// unambiguous. Bundles must be nonempty.
class Menu {
 public:
  Menu() = default;
  explicit Menu(std::vector<MenuEntry> entries);

  const std::vector<MenuEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<MenuEntry> entries_;
};

struct BuyerChoice {
  std::optional<std::size_t> chosen;  // index into menu entries
  Rational utility;                   // 0 when nothing is bought
  Rational price_paid;                // 0 when nothing is bought
};

Rational bundle_value(Bundle bundle, const Valuation& v);

// Utility-maximizing entry; ties broken by higher price, then by the
// smallest entry index. No purchase only when every entry has strictly
// negative utility.
BuyerChoice buyer_choice(const Menu& menu, const Valuation& v);

// All grid points of the product distribution with exact probabilities,
// in lexicographic order of support indices (first item slowest).
struct WeightedValuation {
  Valuation values;
  Rational prob;
};
std::vector<WeightedValuation> enumerate_valuations(const ProductDistribution& dist,
                                                    std::size_t budget = 1u << 20);

Rational expected_revenue(const Menu& menu, const ProductDistribution& dist,
                          std::size_t budget = 1u << 20);

// Every nonempty subset at the sum of its item prices, plus the grand
// bundle at `bundle_price`.
Menu discounted_item_pricing_menu(const std::vector<Rational>& item_prices,
                                  const Rational& bundle_price);

}  // namespace pricing
