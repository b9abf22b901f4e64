#pragma once

#include <stdexcept>
#include <string>

namespace mtasep {

/// Enumeration would exceed the configured MLQ budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// State space would exceed the configured cap for exact solves.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The stationary solve did not produce a unique solution. The chain is
/// irreducible for every strict type, so this indicates a bug, never a
/// condition to paper over by normalizing.
struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mtasep
