#pragma once

#include <stdexcept>
#include <string>

namespace twist {

// Precondition violations raise std::invalid_argument; the classes below mark
// conditions that the mathematics says cannot happen or that are not usage errors.

/// An exact integer identity failed to hold (e.g. a division that must be exact
/// left a remainder). Always an implementation bug.
class ArithmeticFault : public std::logic_error {
public:
    explicit ArithmeticFault(const std::string& what) : std::logic_error(what) {}
};

/// A closed-form evaluation produced something that is not a nonnegative integer.
class NonIntegralCount : public ArithmeticFault {
public:
    explicit NonIntegralCount(const std::string& what) : ArithmeticFault(what) {}
};

/// A mathematical invariant was observed to fail on concrete data.
class PropertyViolation : public std::logic_error {
public:
    explicit PropertyViolation(const std::string& what) : std::logic_error(what) {}
};

/// A search that theory guarantees to succeed did not.
class InternalFault : public std::logic_error {
public:
    explicit InternalFault(const std::string& what) : std::logic_error(what) {}
};

class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

}  // namespace twist
