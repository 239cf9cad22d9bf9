#ifndef VQLAB_ERRORS_HPP
#define VQLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vqlab {

// Container/stream parsing failures.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};
struct TruncatedError : std::runtime_error {
    explicit TruncatedError(const std::string& msg) : std::runtime_error(msg) {}
};
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Sampling asked for frames the video does not have.
struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Grid/guardian shape constraint violations.
struct GridError : std::runtime_error {
    explicit GridError(const std::string& msg) : std::runtime_error(msg) {}
};

// Model dimension mismatches.
struct ModelError : std::runtime_error {
    explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

// A scorer was asked for a capability it does not expose.
struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Correlation/robustness metrics over degenerate inputs.
struct DegenerateError : std::runtime_error {
    explicit DegenerateError(const std::string& msg) : std::runtime_error(msg) {}
};
struct DegenerateDatasetError : DegenerateError {
    explicit DegenerateDatasetError(const std::string& msg) : DegenerateError(msg) {}
};

// Experiment configuration problems (syntax, unknown keys, constraints).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem failures, annotated with the path involved.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vqlab

#endif
