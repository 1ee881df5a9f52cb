#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace zetaforge {

/// Base for every numerical failure raised by the library. Carries the
/// module and operation that raised it so reports can name the source.
class NumericalError : public std::runtime_error {
public:
    NumericalError(std::string module, std::string operation, const std::string& message)
        : std::runtime_error(module + "::" + operation + ": " + message),
          module_(std::move(module)), operation_(std::move(operation)) {}

    const std::string& module() const noexcept { return module_; }
    const std::string& operation() const noexcept { return operation_; }

private:
    std::string module_;
    std::string operation_;
};

/// Argument outside the operation's validity region.
class DomainError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Evaluation at (or within the guard band of) a pole.
class PoleError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A denominator such as 1 - 2^{1-s} fell inside its guard band.
class SingularityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Requested accuracy not reachable within the term or iteration budget.
class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// An internal consistency check on a computed value failed.
class SelfCheckError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Zero scan count disagrees with the counting formula.
class CompletenessError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Malformed or stale zero cache.
class CacheError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace zetaforge
