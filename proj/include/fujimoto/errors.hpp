#pragma once

#include <stdexcept>

namespace fujimoto {

/// An argument violates an operation's documented precondition.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation would exceed its configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fujimoto
