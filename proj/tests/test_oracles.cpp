#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pricing/baselines.hpp"
#include "pricing/errors.hpp"
#include "pricing/oracles.hpp"

using namespace pricing;

namespace {

ProductDistribution make(std::vector<std::vector<std::pair<Rational, Rational>>> items) {
  ProductDistribution d;
  for (auto& s : items) d.items.push_back(ItemDistribution{std::move(s)});
  return d;
}

ProductDistribution one_item_12() {
  return make({{{Rational(1), Rational(1, 2)}, {Rational(2), Rational(1, 2)}}});
}

ProductDistribution iid12(std::size_t n) {
  ProductDistribution d;
  d.items.assign(n, ItemDistribution{{{Rational(1), Rational(1, 2)},
                                      {Rational(2), Rational(1, 2)}}});
  return d;
}

}  // namespace

TEST_CASE("minimal utilities") {
  auto dist = one_item_12();

  auto both = min_utilities(dist, AllocationMap{{1, 1}});
  REQUIRE(both);
  CHECK((*both)[0] == 0);
  CHECK((*both)[1] == 1);

  auto neither = min_utilities(dist, AllocationMap{{0, 0}});
  REQUIRE(neither);
  CHECK((*neither)[0] == 0);
  CHECK((*neither)[1] == 0);

  // Low type allocated, high type not: a positive 2-cycle.
  CHECK(!min_utilities(dist, AllocationMap{{1, 0}}));
}

TEST_CASE("minimal utilities satisfy every difference constraint") {
  auto dist = iid12(2);
  auto grid = enumerate_valuations(dist);
  AllocationMap alloc{{0b00, 0b10, 0b01, 0b11}};
  auto u = min_utilities(dist, alloc);
  REQUIRE(u);
  for (std::size_t w = 0; w < grid.size(); ++w) {
    for (std::size_t v = 0; v < grid.size(); ++v) {
      Rational rhs = (*u)[v];
      for (std::size_t i = 0; i < 2; ++i) {
        if (alloc.allocated[v] & (Bundle{1} << i)) {
          rhs += grid[w].values[i] - grid[v].values[i];
        }
      }
      CHECK((*u)[w] >= rhs);
    }
  }
}

TEST_CASE("brute-force deterministic revenue") {
  auto sure = make({{{Rational(1), Rational(1)}}});
  CHECK(drev_bruteforce(sure).revenue == 1);

  CHECK(drev_bruteforce(one_item_12()).revenue == 1);

  auto r = drev_bruteforce(iid12(2));
  CHECK(r.revenue == Rational(9, 4));

  // Witness allocation is feasible with the reported utilities and the
  // implied prices satisfy IC/IR verbatim.
  auto grid = enumerate_valuations(iid12(2));
  std::vector<Rational> price(grid.size());
  for (std::size_t v = 0; v < grid.size(); ++v) {
    price[v] = bundle_value(r.alloc.allocated[v], grid[v].values) - r.utilities[v];
    CHECK(r.utilities[v] >= 0);
  }
  for (std::size_t w = 0; w < grid.size(); ++w) {
    for (std::size_t v = 0; v < grid.size(); ++v) {
      // No valuation prefers another's bundle-price pair.
      CHECK(bundle_value(r.alloc.allocated[w], grid[w].values) - price[w] >=
            bundle_value(r.alloc.allocated[v], grid[w].values) - price[v]);
    }
  }
}

TEST_CASE("budget guard") {
  DrevOptions tight;
  tight.budget_allocations = 10;
  CHECK_THROWS_AS(drev_bruteforce(iid12(2), tight), BudgetExceeded);
}

TEST_CASE("worker partitioning is deterministic") {
  auto dist = make({{{Rational(1), Rational(1, 3)}, {Rational(3), Rational(2, 3)}},
                    {{Rational(2), Rational(1, 4)}, {Rational(5), Rational(3, 4)}}});
  auto sequential = drev_bruteforce(dist);
  for (unsigned workers : {2u, 3u, 4u}) {
    DrevOptions opt;
    opt.workers = workers;
    auto parallel = drev_bruteforce(dist, opt);
    CHECK(parallel.revenue == sequential.revenue);
    CHECK(parallel.alloc.allocated == sequential.alloc.allocated);
    CHECK(parallel.utilities == sequential.utilities);
  }
}

TEST_CASE("randomized-optimum LP") {
  auto sure = make({{{Rational(1), Rational(1)}}});
  CHECK(rev_lp(sure) == 1);
  CHECK(rev_lp(one_item_12()) == 1);
  CHECK(rev_lp(iid12(2)) == Rational(9, 4));
}

TEST_CASE("symmetric LP equals the standard LP") {
  CHECK(symmetric_rev_lp(1, Rational(2), Rational(1, 2)) == 1);
  CHECK(symmetric_rev_lp(2, Rational(2), Rational(1, 2)) == Rational(9, 4));

  for (std::size_t n : {1, 2, 3}) {
    for (auto [bn, bd, pn, pd] : {std::tuple{3, 1, 1, 2}, {5, 2, 1, 4}, {7, 2, 2, 3}}) {
      const Rational b(bn, bd), p(pn, pd);
      ProductDistribution d;
      d.items.assign(n, ItemDistribution{{{Rational(1), 1 - p}, {b, p}}});
      CHECK(symmetric_rev_lp(n, b, p) == rev_lp(d));
    }
  }
}

TEST_CASE("dominance chain") {
  auto cases = {make({{{Rational(1), Rational(1, 2)}, {Rational(3), Rational(1, 2)}},
                      {{Rational(2), Rational(1, 4)}, {Rational(5), Rational(3, 4)}}}),
                iid12(2),
                make({{{Rational(1), Rational(1, 3)}, {Rational(2), Rational(1, 3)},
                       {Rational(4), Rational(1, 3)}}})};
  for (const auto& dist : cases) {
    const Rational d = drev_bruteforce(dist).revenue;
    CHECK(srev(dist).revenue <= d);
    CHECK(brev(dist).revenue <= d);
    CHECK(d <= rev_lp(dist));
  }
}

TEST_CASE("single-item allocations are upward closed") {
  auto dist = make(
      {{{Rational(1), Rational(1, 4)}, {Rational(2), Rational(1, 4)},
        {Rational(3), Rational(1, 4)}, {Rational(5), Rational(1, 4)}}});
  // Every feasible map allocating to a low value must allocate to all
  // higher values too.
  for (unsigned mask = 0; mask < 16; ++mask) {
    AllocationMap alloc{{mask & 1u, (mask >> 1) & 1u, (mask >> 2) & 1u, (mask >> 3) & 1u}};
    const bool feasible = min_utilities(dist, alloc).has_value();
    bool upward = true;
    for (int i = 0; i < 3; ++i) {
      if ((mask >> i & 1u) && !(mask >> (i + 1) & 1u)) upward = false;
    }
    CHECK(feasible == upward);
  }
}
