#pragma once

#include <stdexcept>
#include <string>

namespace lv {

// Mismatched variable counts between operands.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_invertible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct inadmissible_prime_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search aborted because the node budget was exhausted; no partial results.
struct budget_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closure completion exceeded the configured element bound.
struct closure_bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lv
