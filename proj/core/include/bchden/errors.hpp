#pragma once

#include <stdexcept>
#include <string>

namespace bchden {

/// A requested computation exceeds a configured enumeration or scan budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// v_p(0) is infinite; kept separate from ordinary argument errors.
class InfiniteValuation : public std::domain_error {
public:
    InfiniteValuation() : std::domain_error("p-adic valuation of 0 is infinite") {}
};

/// A computed value contradicts a proven identity (e.g. a numerator over
/// n!*d_n that is not an integer). Indicates a bug, never bad input.
class CorrectnessViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace bchden
