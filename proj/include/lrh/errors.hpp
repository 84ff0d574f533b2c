#pragma once
#include <stdexcept>
#include <string>

namespace lrh {

// Invalid grid/exponent/manifest parameters. CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation (t <= 0, r < 1, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A field or a set of interpolation points left the well-resolved region.
struct ResolutionError : std::runtime_error {
    explicit ResolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Time integration broke down. CLI exit code 3.
struct IntegrationError : std::runtime_error {
    explicit IntegrationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Picard map failed to contract; the time window T is too large.
struct NonContractionError : IntegrationError {
    explicit NonContractionError(const std::string& msg) : IntegrationError(msg) {}
};

} // namespace lrh
