#include "pricing/constk.hpp"

#include <algorithm>
#include <set>

#include "pricing/errors.hpp"
#include "pricing/linalg.hpp"

namespace pricing {

Menu PriceVector::menu() const {
  std::vector<MenuEntry> entries;
  entries.reserve(prices.size());
  for (std::size_t j = 0; j < prices.size(); ++j) {
    entries.push_back({static_cast<Bundle>(j + 1), prices[j]});
  }
  return Menu(std::move(entries));
}

namespace {

// Scale so the first nonzero coefficient is 1; equal planes then compare
// equal componentwise.
std::pair<std::vector<Rational>, Rational> canonical(const Hyperplane& h) {
  Rational scale(0);
  for (const auto& c : h.coefficients) {
    if (c != 0) {
      scale = c;
      break;
    }
  }
  std::vector<Rational> coeffs = h.coefficients;
  Rational rhs = h.rhs;
  if (scale != 0) {
    for (auto& c : coeffs) c /= scale;
    rhs /= scale;
  }
  return {std::move(coeffs), std::move(rhs)};
}

}  // namespace

std::vector<Hyperplane> build_hyperplanes(const ProductDistribution& dist,
                                          const ConstkBudget& budget) {
  dist.validate();
  const std::size_t k = dist.item_count();
  if (k > budget.max_items) throw BudgetExceeded("item count exceeds --max-items");
  const std::size_t d = (std::size_t{1} << k) - 1;
  const auto grid = enumerate_valuations(dist);

  std::vector<Hyperplane> planes;
  std::set<std::pair<std::vector<Rational>, Rational>> seen;
  auto push = [&](Hyperplane h) {
    if (seen.insert(canonical(h)).second) planes.push_back(std::move(h));
  };

  for (const auto& wv : grid) {
    for (Bundle j = 1; j <= d; ++j) {
      Hyperplane h;
      h.coefficients.assign(d, Rational(0));
      h.coefficients[j - 1] = 1;
      h.rhs = bundle_value(j, wv.values);
      h.kind = HyperplaneKind::ValuePrice;
      push(std::move(h));
    }
    for (Bundle j = 1; j <= d; ++j) {
      for (Bundle j2 = j + 1; j2 <= d; ++j2) {
        Hyperplane h;
        h.coefficients.assign(d, Rational(0));
        h.coefficients[j - 1] = 1;
        h.coefficients[j2 - 1] = -1;
        h.rhs = bundle_value(j, wv.values) - bundle_value(j2, wv.values);
        h.kind = HyperplaneKind::BundleVsBundle;
        push(std::move(h));
      }
    }
  }
  for (Bundle j = 1; j <= d; ++j) {
    for (Bundle j2 = j + 1; j2 <= d; ++j2) {
      Hyperplane h;
      h.coefficients.assign(d, Rational(0));
      h.coefficients[j - 1] = 1;
      h.coefficients[j2 - 1] = -1;
      h.rhs = 0;
      h.kind = HyperplaneKind::PriceVsPrice;
      push(std::move(h));
    }
  }
  return planes;
}

std::vector<PriceVector> enumerate_vertices(const std::vector<Hyperplane>& planes,
                                            std::size_t d, const ConstkBudget& budget) {
  const std::size_t m = planes.size();
  if (m < d) return {};
  Integer subsets = binomial(m, d);
  if (subsets > budget.max_subsets) {
    throw BudgetExceeded("hyperplane d-subset count exceeds budget");
  }

  std::set<std::vector<Rational>> points;
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  bool more = true;
  while (more) {
    Matrix rows(d);
    std::vector<Rational> rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
      rows[i] = planes[pick[i]].coefficients;
      rhs[i] = planes[pick[i]].rhs;
    }
    if (auto sol = solve_linear_system(std::move(rows), std::move(rhs))) {
      bool nonneg = true;
      for (const auto& x : *sol) {
        if (x < 0) {
          nonneg = false;
          break;
        }
      }
      if (nonneg) points.insert(std::move(*sol));
    }
    // Next d-combination of [0, m).
    more = false;
    for (std::size_t i = d; i-- > 0;) {
      if (pick[i] + (d - i) < m) {
        ++pick[i];
        for (std::size_t j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
        more = true;
        break;
      }
    }
  }
  std::vector<PriceVector> out;
  out.reserve(points.size());
  for (auto& pt : points) out.push_back(PriceVector{pt});
  return out;
}

ConstkResult solve_constk(const ProductDistribution& dist, const ConstkBudget& budget,
                          std::vector<PriceVector>* emit_candidates) {
  const auto planes = build_hyperplanes(dist, budget);
  const std::size_t d = (std::size_t{1} << dist.item_count()) - 1;
  auto vertices = enumerate_vertices(planes, d, budget);
  if (vertices.empty()) {
    throw InternalConsistencyError("vertex enumeration produced no candidates");
  }
  if (emit_candidates) *emit_candidates = vertices;

  ConstkResult result;
  result.candidates_examined = vertices.size();
  bool have = false;
  for (auto& v : vertices) {  // sorted: ties keep the lexicographically smallest
    Rational revenue = expected_revenue(v.menu(), dist);
    if (!have || revenue > result.revenue) {
      have = true;
      result.revenue = std::move(revenue);
      result.best_prices = std::move(v);
    }
  }
  return result;
}

}  // namespace pricing
