#pragma once

#include <stdexcept>
#include <string>

namespace raymod {

/// Invalid mathematical input (zero polynomial, mismatched rings, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A series coefficient was requested beyond the certified window.
/// Raised instead of silently returning 0.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured enumeration or size budget was exceeded.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed (e.g. a coefficient that must be
/// p-integral is not).  Always indicates a bug, never bad user input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void check_domain(bool cond, const std::string& what) {
    if (!cond) throw DomainError(what);
}

inline void check_internal(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

} // namespace raymod
