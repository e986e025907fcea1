#pragma once

#include <stdexcept>
#include <string>

namespace osp {

// Violated mathematical precondition (weight outside a cone, lattice, or
// dominance domain). Distinct from std::invalid_argument, which we reserve
// for malformed input syntax.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Configured enumeration cap exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace osp
