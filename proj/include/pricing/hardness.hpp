#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pricing/market.hpp"
#include "pricing/rational.hpp"

namespace pricing {

// Counting-threshold instance: does B have at least t half-size subsets
// whose sum reaches the target w = sum of B over W?
struct CompInstance {
  std::vector<Integer> b;              // nondecreasing, each in [0, 2^n]
  std::vector<std::size_t> w_indices;  // 0-based indices into b, |W| = n/2
  Integer t;

  std::size_t n() const { return b.size(); }
  Integer target() const;
  void validate() const;
};

// Same shape, plus two structural conditions:
//   (1) b_1 + ... + b_{n/2-1} + b_n >= w
//   (2) b_2 + b_{n/2+1} + ... + b_{n-1} < w
struct CompStarInstance {
  CompInstance inst;

  void validate() const;
};

CompStarInstance make_compstar(CompInstance inst);

// Embeds a size-n instance into a size-4n one with the structural
// conditions holding by construction; preserves the yes/no answer.
std::pair<CompStarInstance, Integer> comp_to_compstar(const CompInstance& inst);

struct TstarBudget {
  Integer max_subsets = Integer(1) << 26;
};

// Number of (n/2)-subsets of B whose sum is >= w.
Integer count_tstar(const CompInstance& inst, const TstarBudget& budget = {});

// Pricing instance over n+1 items encoding a CompStar instance: item i is
// supported on {1, h_i + 1}, the last ("special") item on {sigma,
// sigma + alpha}.
struct HardInstance {
  std::size_t n = 0;
  Integer t;
  Rational h, p, delta, c, alpha, sigma, tau, eps;
  Rational prob_gt_half;  // Pr[more than n/2 regular items are high]
  Rational a_prime, c_prime;
  std::vector<Rational> a;        // a_i = b_i * delta
  std::vector<Rational> h_items;  // h_i = h + a_i
  ProductDistribution dist;
  CompInstance source;
};

HardInstance build_hard_instance(const CompStarInstance& star, const Integer& t);

enum class Winner { Solution1, Solution2 };

struct SolutionPair {
  Rational rev1;
  Rational rev2;
  Menu sol1_menu;
  Menu sol2_menu;
  Integer t_star;
  Rational a_prime;
  Rational rev_b_term;
  Rational c_prime;
};

SolutionPair build_solutions(const HardInstance& hi, const TstarBudget& budget = {});

struct WinnerReport {
  Winner winner;
  Rational residual;  // rev2 - rev1 - C'(t* - t + 1/2)
};

WinnerReport decide_winner(const SolutionPair& sp, const Integer& t);

}  // namespace pricing
