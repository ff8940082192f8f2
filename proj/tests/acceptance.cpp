// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Every comparison is exact rational equality.

#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "pricing/baselines.hpp"
#include "pricing/constk.hpp"
#include "pricing/hardness.hpp"
#include "pricing/iid2.hpp"
#include "pricing/lp.hpp"
#include "pricing/market.hpp"
#include "pricing/oracles.hpp"

using namespace pricing;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& note = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << index << ": " << name;
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

ProductDistribution iid(std::size_t n, const Rational& a, const Rational& b, const Rational& p) {
  ProductDistribution d;
  d.items.assign(n, ItemDistribution{{{a, 1 - p}, {b, p}}});
  return d;
}

struct Suite12 {
  std::vector<ProductDistribution> instances;
  std::vector<Rational> drev_values;
};

// Criterion 1: closed form = standard LP = brute force on the full
// (n, b, p) matrix.
bool criterion1(Suite12& suite) {
  for (std::size_t n : {1, 2, 3}) {
    for (const Rational& b : {Rational(2), Rational(3), Rational(5, 2)}) {
      for (const Rational& p : {Rational(1, 4), Rational(1, 2)}) {
        auto dist = iid(n, Rational(1), b, p);
        const Rational closed = solve_iid2({n, Rational(1), b, p}).revenue;
        const Rational lp = rev_lp(dist);
        const Rational brute = drev_bruteforce(dist).revenue;
        if (closed != lp || closed != brute) return false;
        suite.instances.push_back(dist);
        suite.drev_values.push_back(brute);
      }
    }
  }
  return true;
}

// Criterion 2: vertex enumeration = brute force on a two-item matrix.
bool criterion2(Suite12& suite) {
  std::size_t count = 0;
  const Rational probs[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (int low = 1; low <= 3; ++low) {
    for (int high = low + 1; high <= 4; ++high) {
      for (const auto& p : probs) {
        for (const auto& q : probs) {
          ProductDistribution dist;
          dist.items = {ItemDistribution{{{Rational(low), 1 - p}, {Rational(high), p}}},
                        ItemDistribution{{{Rational(low), 1 - q}, {Rational(high + 0), q}}}};
          const Rational vertex = solve_constk(dist).revenue;
          const Rational brute = drev_bruteforce(dist).revenue;
          if (vertex != brute) return false;
          suite.instances.push_back(dist);
          suite.drev_values.push_back(brute);
          ++count;
        }
      }
    }
  }
  return count >= 20;
}

// Criterion 3: srev <= drev, brev <= drev, drev <= rev_lp on suites 1-2.
bool criterion3(const Suite12& suite) {
  for (std::size_t i = 0; i < suite.instances.size(); ++i) {
    const auto& dist = suite.instances[i];
    const Rational& d = suite.drev_values[i];
    if (srev(dist).revenue > d) return false;
    if (brev(dist).revenue > d) return false;
    if (d > rev_lp(dist)) return false;
  }
  return true;
}

// Criterion 4: exhaustive yes/no preservation of the embedding for all
// 2-element B in [0:4] and both W choices.
bool criterion4() {
  for (long b1 = 0; b1 <= 4; ++b1) {
    for (long b2 = b1; b2 <= 4; ++b2) {
      for (std::size_t w : {std::size_t{0}, std::size_t{1}}) {
        CompInstance inst;
        inst.b = {Integer(b1), Integer(b2)};
        inst.w_indices = {w};
        inst.t = 1;
        auto [star, t_prime] = comp_to_compstar(inst);
        try {
          star.validate();
        } catch (...) {
          return false;
        }
        const Integer small = count_tstar(inst);
        Integer big(0);
        const Integer target = star.inst.target();
        for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
          if (__builtin_popcount(mask) != 4) continue;
          Integer sum(0);
          for (std::size_t i = 0; i < 8; ++i) {
            if (mask >> i & 1u) sum += star.inst.b[i];
          }
          if (sum >= target) ++big;
        }
        if (big != Integer(binomial(7, 3)) + small) return false;
        for (long t = 0; t <= 3; ++t) {
          if ((small >= t) != (big >= Integer(binomial(7, 3)) + t)) return false;
        }
      }
    }
  }
  return true;
}

CompInstance random_comp(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<long> entry(0, (1L << std::min<std::size_t>(n, 20)) - 1);
  CompInstance inst;
  std::vector<long> vals(n);
  for (auto& v : vals) v = entry(rng);
  std::sort(vals.begin(), vals.end());
  for (long v : vals) inst.b.push_back(Integer(v));
  for (std::size_t i = 0; i + 1 < n / 2; ++i) inst.w_indices.push_back(i);
  inst.w_indices.push_back(n - 1);
  inst.t = 1;
  return inst;
}

// Criterion 5: exact closed forms of the reduction's two solutions,
// epsilon bound at n=8, and the residual threshold.
bool criterion5(std::string& note) {
  std::mt19937 rng(20260826);
  for (std::size_t n : {std::size_t{2}, std::size_t{4}, std::size_t{8}}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto source = random_comp(n, rng);
      const Integer tmax = Integer(1) << n;
      Integer t = Integer(1 + trial) % tmax;
      if (t == 0) t = 1;
      HardInstance hi;
      try {
        hi = build_hard_instance(CompStarInstance{source}, t);
      } catch (...) {
        return false;
      }
      auto sp = build_solutions(hi);
      if (sp.rev1 != Rational(static_cast<long>(n)) + hi.sigma) return false;
      if (n <= 3) {
        if (expected_revenue(sp.sol1_menu, hi.dist) != sp.rev1) return false;
        if (expected_revenue(sp.sol2_menu, hi.dist) != sp.rev2) return false;
      }
      if (n == 8) {
        const Rational mag = hi.eps < 0 ? Rational(-hi.eps) : hi.eps;
        if (mag >= checked_div(Rational(1), hi.sigma)) return false;
      }
    }
  }

  // Smallest n (10 random instances each, n <= 12) where the residual
  // magnitude stays below C'/2 throughout.
  for (std::size_t n = 2; n <= 12; n += 2) {
    bool all_within = true;
    for (int trial = 0; trial < 10 && all_within; ++trial) {
      auto source = random_comp(n, rng);
      Integer t = Integer(1 + rng() % (1u << n));
      auto hi = build_hard_instance(CompStarInstance{source}, t);
      auto sp = build_solutions(hi);
      auto verdict = decide_winner(sp, t);
      const Rational mag =
          verdict.residual < 0 ? Rational(-verdict.residual) : verdict.residual;
      if (mag >= checked_div(sp.c_prime, Rational(2))) all_within = false;
    }
    if (all_within) {
      note = "residual bound first holds at n=" + std::to_string(n);
      return true;
    }
  }
  return false;
}

// Criterion 6: level probabilities sum to one, the level-wise inequality
// is strictly positive, and the threshold expression flips sign once.
bool criterion6() {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) {
      auto probs = level_probabilities(n, p);
      Rational sum(0);
      for (const auto& q : probs) sum += q;
      if (sum != 1) return false;
      for (std::size_t i = 1; i < n; ++i) {
        Rational expr = probs[i] * Rational(static_cast<long>(n - i));
        for (std::size_t j = i + 1; j <= n; ++j) {
          expr += probs[j] *
                  (Rational(static_cast<long>(n)) - checked_div(Rational(static_cast<long>(i)), p));
        }
        if (!(expr > 0)) return false;
      }
      for (const Rational& b : {Rational(2), Rational(7, 2)}) {
        // find_k throws on any double sign change.
        std::vector<Rational> suffix(n + 2, Rational(0));
        for (std::size_t i = n + 1; i-- > 1;) suffix[i] = suffix[i + 1] + probs[i];
        const std::size_t k = find_k(n, b, p);
        for (std::size_t i = 0; i <= n; ++i) {
          Rational expr =
              Rational(static_cast<long>(n - i)) * probs[i] - (b - 1) * suffix[i + 1];
          if ((expr >= 0) != (i >= k)) return false;
        }
      }
    }
  }
  return true;
}

// Criterion 7: randomized buyer-model trials.
bool criterion7() {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(0, 6);
  const Rational scale(5, 3);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + small(rng) % 4;
    std::vector<MenuEntry> entries, scaled_entries;
    const int m = 1 + small(rng);
    for (int e = 0; e < m; ++e) {
      Bundle bundle = 1 + (rng() % ((1u << n) - 1));
      Rational price = make_rational(small(rng), 1 + small(rng));
      entries.push_back({bundle, price});
      scaled_entries.push_back({bundle, price * scale});
    }
    Menu menu(std::move(entries));
    Menu scaled(std::move(scaled_entries));
    Valuation v(n), sv(n);
    for (int i = 0; i < n; ++i) {
      v[i] = make_rational(small(rng), 1 + small(rng));
      sv[i] = v[i] * scale;
    }
    auto choice = buyer_choice(menu, v);
    if (choice.utility < 0) return false;
    if (buyer_choice(menu, v).chosen != choice.chosen) return false;
    for (const auto& e : menu.entries()) {
      if (bundle_value(e.bundle, v) - e.price > choice.utility) return false;
    }
    if (choice.chosen) {
      const auto& picked = menu.entries()[*choice.chosen];
      if (bundle_value(picked.bundle, v) - picked.price != choice.utility) return false;
    }
    auto covariant = buyer_choice(scaled, sv);
    if (covariant.chosen != choice.chosen) return false;
    if (covariant.utility != choice.utility * scale) return false;
  }
  return true;
}

// Criterion 8: strong duality on 100 random LPs plus Bland termination on
// a crafted degenerate LP.
bool criterion8() {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> rhs(0, 9);
  std::uniform_int_distribution<int> dims(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = dims(rng), m = dims(rng);
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n));
    std::vector<Rational> b(m), c(n);
    for (auto& row : a)
      for (auto& x : row) x = coeff(rng);
    for (auto& x : b) x = rhs(rng);
    for (auto& x : c) x = coeff(rng);

    LinearProgram primal;
    primal.objective = c;
    primal.bounds.assign(n, VariableBounds{Rational(0), Rational(10)});
    for (int i = 0; i < m; ++i) primal.constraints.push_back({a[i], Relation::LessEq, b[i]});

    LinearProgram dual;
    dual.objective.assign(m + n, Rational(0));
    for (int i = 0; i < m; ++i) dual.objective[i] = -b[i];
    for (int j = 0; j < n; ++j) dual.objective[m + j] = Rational(-10);
    dual.bounds.assign(m + n, VariableBounds{Rational(0), std::nullopt});
    for (int j = 0; j < n; ++j) {
      LinearConstraint row;
      row.coeffs.assign(m + n, Rational(0));
      for (int i = 0; i < m; ++i) row.coeffs[i] = a[i][j];
      row.coeffs[m + j] = 1;
      row.rel = Relation::GreaterEq;
      row.rhs = c[j];
      dual.constraints.push_back(std::move(row));
    }

    auto pres = lp_solve(primal);
    auto dres = lp_solve(dual);
    auto* popt = std::get_if<LpOptimum>(&pres);
    auto* dopt = std::get_if<LpOptimum>(&dres);
    if (!popt || !dopt) return false;
    if (popt->value != -dopt->value) return false;
  }

  // Beale's cycling LP.
  LinearProgram beale;
  beale.objective = {Rational(3, 4), Rational(-150), Rational(1, 50), Rational(-6)};
  beale.bounds.assign(4, VariableBounds{Rational(0), std::nullopt});
  beale.constraints = {
      {{Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)}, Relation::LessEq,
       Rational(0)},
      {{Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)}, Relation::LessEq,
       Rational(0)},
      {{Rational(0), Rational(0), Rational(1), Rational(0)}, Relation::LessEq, Rational(1)}};
  auto result = lp_solve(beale);
  auto* opt = std::get_if<LpOptimum>(&result);
  return opt && opt->value == Rational(1, 20);
}

}  // namespace

int main() {
  Suite12 suite;
  try {
    report(1, "closed form = LP = brute force on the (n,b,p) matrix", criterion1(suite));
    report(2, "vertex enumeration = brute force on the two-item matrix", criterion2(suite));
    report(3, "dominance chain srev,brev <= drev <= rev_lp", criterion3(suite));
    report(4, "embedding preserves yes/no answers exhaustively", criterion4());
    std::string note;
    const bool c5 = criterion5(note);
    report(5, "reduction closed forms, epsilon and residual bounds", c5, note);
    report(6, "level-probability identities and single sign change", criterion6());
    report(7, "buyer-model invariants over 10^4 randomized trials", criterion7());
    report(8, "strong duality and anti-cycling termination", criterion8());
  } catch (const std::exception& e) {
    std::cout << "FAIL: unexpected exception: " << e.what() << std::endl;
    return 1;
  }
  return g_failures == 0 ? 0 : 1;
}
