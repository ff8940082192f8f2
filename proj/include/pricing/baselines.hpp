#pragma once

#include <vector>

#include "pricing/market.hpp"

namespace pricing {

struct PricingResult {
  Rational revenue;
  std::vector<Rational> prices;  // per item for srev, single entry for brev
};

// Optimal separate item pricing: per item, the support value maximizing
// price * Pr[value >= price], ties toward the smaller price.
PricingResult srev(const ProductDistribution& dist);

// Optimal grand-bundle pricing over the attainable total-value sums.
PricingResult brev(const ProductDistribution& dist, std::size_t budget = 1u << 20);

}  // namespace pricing
