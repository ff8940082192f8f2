#pragma once

#include <optional>
#include <vector>

#include "pricing/rational.hpp"

namespace pricing {

using Matrix = std::vector<std::vector<Rational>>;

// Exact Gaussian elimination over the rationals. Returns the unique
// solution of rows * x = rhs, or nullopt when the matrix is singular.
std::optional<std::vector<Rational>> solve_linear_system(Matrix rows,
                                                         std::vector<Rational> rhs);

}  // namespace pricing
