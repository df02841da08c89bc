#pragma once

#include <stdexcept>
#include <string>

namespace soisim {

/// Bad run configuration (unknown key, inconsistent model/policy pairing, ...).
/// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric failure (series cap exceeded, episode cap exceeded, ...).
/// The CLI maps this to exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace soisim
