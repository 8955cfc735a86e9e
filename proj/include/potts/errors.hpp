#pragma once

#include <stdexcept>
#include <string>

namespace potts {

/// Malformed input text (graph files, weight files, flag values).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or evaluation would exceed the configured size caps.
struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition was violated by the caller.
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// A parameter search exhausted its budget without finding a feasible point.
struct SearchError : std::runtime_error {
    explicit SearchError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested configuration cannot be honoured (e.g. a disk map whose image
/// escapes the target region in strict mode).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace potts
