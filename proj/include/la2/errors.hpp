#pragma once

#include <stdexcept>
#include <string>

#include "la2/integer.hpp"

namespace la2 {

// Combining two QuadInt values that live in different rings Z[sqrt(tau)].
struct RingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Invalid mathematical input (square radicand, m < 1, class index out of
// range, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Solving/counting requested for an equation of class Z(j) with j != 1.
struct UnsupportedClassError : std::runtime_error {
    explicit UnsupportedClassError(Integer j_)
        : std::runtime_error("equation belongs to Z(" + j_.get_str() +
                             "); only j = 1 is solvable"),
          j(std::move(j_)) {}
    Integer j;
};

// x below the validity threshold of the counting formula.
struct ThresholdError : std::runtime_error {
    ThresholdError(Integer x_, Integer required_)
        : std::runtime_error("x = " + x_.get_str() +
                             " is below the formula threshold " +
                             required_.get_str()),
          x(std::move(x_)),
          required(std::move(required_)) {}
    Integer x;
    Integer required;
};

// A cross-check between two algebraically equal routes disagreed, or an
// iteration that is provably finite hit its cap. Always a bug, never user
// error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// A configurable resource cap (oracle scan size, CF period length) was hit.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace la2
