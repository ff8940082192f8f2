#pragma once

#include <stdexcept>
#include <string>

namespace pricing {

// Input could not be parsed or violates a documented invariant.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration or LP exceeds its configured size budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested object does not exist (e.g. an LP with no feasible point
// or an allocation map admitting no utility assignment).
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A property the underlying theory guarantees failed to hold; this
// signals a bug in the implementation, never bad user input.
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pricing
