#pragma once

#include <cstddef>
#include <vector>

#include "pricing/market.hpp"
#include "pricing/rational.hpp"

namespace pricing {

enum class HyperplaneKind { ValuePrice, BundleVsBundle, PriceVsPrice };

// A hyperplane over the d = 2^k - 1 nonempty-bundle prices; coefficient j
// multiplies the price of bundle mask j+1.
struct Hyperplane {
  std::vector<Rational> coefficients;
  Rational rhs;
  HyperplaneKind kind = HyperplaneKind::ValuePrice;
};

struct PriceVector {
  std::vector<Rational> prices;  // indexed by bundle mask - 1

  Menu menu() const;
};

struct ConstkResult {
  PriceVector best_prices;
  Rational revenue;
  std::size_t candidates_examined = 0;
};

struct ConstkBudget {
  std::size_t max_items = 3;
  Integer max_subsets = Integer(1) << 26;
};

std::vector<Hyperplane> build_hyperplanes(const ProductDistribution& dist,
                                          const ConstkBudget& budget = {});

std::vector<PriceVector> enumerate_vertices(const std::vector<Hyperplane>& planes,
                                            std::size_t d, const ConstkBudget& budget = {});

ConstkResult solve_constk(const ProductDistribution& dist, const ConstkBudget& budget = {},
                          std::vector<PriceVector>* emit_candidates = nullptr);

}  // namespace pricing
