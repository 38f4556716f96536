#pragma once

#include <stdexcept>
#include <string>

namespace mirrorcell {

// Raised when a numeric sampling routine exhausts its retry budget.
struct SamplingError : std::runtime_error {
    explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a numeric verification contract fails (residual, count,
// separation, transversality, ...). The message names the offending check.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the genus oracle cannot separate nearby branch values; the
// caller should resample the base point and retry.
struct OracleInconclusive : std::runtime_error {
    explicit OracleInconclusive(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mirrorcell
