// Error categories used across the library.
//
// DomainError: the request is mathematically invalid (composite characteristic,
// reducible modulus, malformed input, value outside the documented domain).
// GuardError: the request is valid but would exceed a resource guard, for
// example asking to densely expand a polynomial of astronomical degree.
#pragma once

#include <stdexcept>
#include <string>

namespace orecomp {

struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency check; failures indicate a bug, not bad input.
inline void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + msg);
}

}  // namespace orecomp
