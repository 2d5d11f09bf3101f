#pragma once

#include <stdexcept>
#include <string>

namespace dyts {

// Raised when an operation receives an argument outside its domain.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a run or experiment is misconfigured, before any work starts.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dyts
