#pragma once

#include <stdexcept>
#include <string>

namespace ferrook {

/// A mathematical precondition of the requested quantity does not hold.
/// The message names the violated condition.
class HypothesisViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exhaustive computation would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ferrook
