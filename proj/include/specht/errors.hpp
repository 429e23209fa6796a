#pragma once

#include <stdexcept>
#include <string>

namespace specht {

// A resource guard refused the request (problem too large for the explicit oracle).
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace specht
