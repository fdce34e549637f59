#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Bad experiment setup: unknown scheme/noise combination, out-of-range
// parameter, malformed config. The CLI maps this to exit code 2.
struct config_error : std::invalid_argument {
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical invariant (normalization, trace, Hermiticity, positivity)
// failed beyond tolerance. The CLI maps this to exit code 1.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qwalk
