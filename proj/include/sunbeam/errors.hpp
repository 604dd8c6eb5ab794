#pragma once

#include <stdexcept>
#include <string>

namespace sunbeam {

/// Raised when an operation would exceed a configured resource guard
/// (permanent size limit, enumeration budget, distribution cap).
class ResourceGuardError : public std::runtime_error {
public:
    explicit ResourceGuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a K-matrix enumeration exceeds its visit/node budget.
class BudgetExceededError : public ResourceGuardError {
public:
    explicit BudgetExceededError(const std::string& what) : ResourceGuardError(what) {}
};

}  // namespace sunbeam
