#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace zeno {

// Argument outside the mathematical domain of an operation (negative rates,
// epsilon outside [0,1], tan singularities, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Projection index k outside [0, N].
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Closed forms that are singular at small N (tan(pi/2) at N = 2).
class DegenerateNError : public DomainError {
public:
    using DomainError::DomainError;
};

// Two consecutive states with vanishing overlap: the relative phase is undefined.
class OrthogonalStepError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Field_only Table 1 column requested at a field strength that is not cyclic.
class NonCyclicError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedModeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

} // namespace zeno
