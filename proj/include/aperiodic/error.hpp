#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace aperiodic {

/// Base of every error thrown by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error objects.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Letter outside a morphism's domain, division by zero, unsupported query.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

/// A stated precondition on parameters (schedule inequalities, positivity) fails.
class ConstraintError : public Error {
public:
    explicit ConstraintError(const std::string& what) : Error("constraint", what) {}
};

/// Input word is not a factor of the expected language.
class LanguageError : public Error {
public:
    explicit LanguageError(const std::string& what) : Error("language", what) {}
};

/// Repeated or defective eigenvalue where a simple one is required.
class DegeneracyError : public Error {
public:
    explicit DegeneracyError(const std::string& what) : Error("degeneracy", what) {}
};

/// A deformation rule has no entry for a collar that occurs.
class TotalityError : public Error {
public:
    explicit TotalityError(const std::string& what) : Error("totality", what) {}
};

/// Materialization would exceed the expansion budget. Carries the exact
/// symbolic length that was requested.
class BudgetError : public Error {
public:
    BudgetError(const std::string& what, mpz_class exactLength)
        : Error("budget", what), exactLength_(std::move(exactLength)) {}

    const mpz_class& exactLength() const noexcept { return exactLength_; }

private:
    mpz_class exactLength_;
};

} // namespace aperiodic
