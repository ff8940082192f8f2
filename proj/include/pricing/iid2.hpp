#pragma once

#include <cstddef>
#include <vector>

#include "pricing/market.hpp"
#include "pricing/rational.hpp"

namespace pricing {

// n i.i.d. items, each worth `a` with probability 1-p and `b` with
// probability p.
struct Iid2Instance {
  std::size_t n = 0;
  Rational a;
  Rational b;
  Rational p;

  void validate() const;
  ProductDistribution distribution() const;
};

struct Iid2Solution {
  std::size_t k = 0;
  Rational bundle_price;
  Rational item_price;
  Rational revenue;
  std::vector<Rational> level_probs;

  // Each item at item_price, the grand bundle at bundle_price.
  Menu menu(std::size_t n) const;
};

std::vector<Rational> level_probabilities(std::size_t n, const Rational& p);

// Smallest i such that (n-i) P_i - (b-1) (P_{i+1} + ... + P_n) >= 0.
std::size_t find_k(std::size_t n, const Rational& b, const Rational& p);

Iid2Solution solve_iid2(const Iid2Instance& inst);

}  // namespace pricing
