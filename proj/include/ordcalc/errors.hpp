#pragma once

#include <stdexcept>
#include <string>

namespace ordcalc {

/// Thrown when an operation's stated precondition is violated
/// (dimension mismatch, ring mismatch, unsupported combination, ...).
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Thrown when a configurable resource cap (completion vectors, PL pieces,
/// term nodes) is exceeded. An incomplete answer is never returned silently.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace ordcalc
