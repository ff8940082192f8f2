#include "pricing/baselines.hpp"

#include <algorithm>
#include <map>

namespace pricing {

PricingResult srev(const ProductDistribution& dist) {
  PricingResult result;
  result.revenue = 0;
  for (const auto& item : dist.items) {
    const auto& sup = item.support;
    Rational best_rev(-1);
    Rational best_price;
    // Pr[value >= price] for price = sup[j] is the suffix probability sum.
    for (std::size_t j = 0; j < sup.size(); ++j) {
      Rational tail(0);
      for (std::size_t l = j; l < sup.size(); ++l) tail += sup[l].second;
      Rational rev = sup[j].first * tail;
      if (rev > best_rev) {
        best_rev = rev;
        best_price = sup[j].first;
      }
    }
    result.revenue += best_rev;
    result.prices.push_back(best_price);
  }
  return result;
}

PricingResult brev(const ProductDistribution& dist, std::size_t budget) {
  // An optimum lies at an attainable total-value sum: pi * Pr[X >= pi] is
  // linear increasing in pi between consecutive attainable points.
  std::map<Rational, Rational> sum_prob;  // total value -> probability
  for (const auto& wv : enumerate_valuations(dist, budget)) {
    Rational total(0);
    for (const auto& v : wv.values) total += v;
    sum_prob[total] += wv.prob;
  }
  Rational best_rev(-1);
  Rational best_price;
  Rational tail(1);  // Pr[X >= current candidate], iterating ascending
  for (const auto& [price, prob] : sum_prob) {
    Rational rev = price * tail;
    if (rev > best_rev) {
      best_rev = rev;
      best_price = price;
    }
    tail -= prob;
  }
  PricingResult result;
  result.revenue = best_rev;
  result.prices.push_back(best_price);
  return result;
}

}  // namespace pricing
