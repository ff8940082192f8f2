#include "pricing/linalg.hpp"

#include <cassert>
#include <utility>

namespace pricing {

std::optional<std::vector<Rational>> solve_linear_system(Matrix rows,
                                                         std::vector<Rational> rhs) {
  const std::size_t d = rows.size();
  assert(rhs.size() == d);
  for (const auto& row : rows) assert(row.size() == d);

  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && rows[pivot][col] == 0) ++pivot;
    if (pivot == d) return std::nullopt;
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      std::swap(rhs[pivot], rhs[col]);
    }
    const Rational inv = Rational(1) / rows[col][col];
    for (std::size_t j = col; j < d; ++j) rows[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || rows[i][col] == 0) continue;
      const Rational factor = rows[i][col];
      for (std::size_t j = col; j < d; ++j) rows[i][j] -= factor * rows[col][j];
      rhs[i] -= factor * rhs[col];
    }
  }
  return rhs;
}

}  // namespace pricing
