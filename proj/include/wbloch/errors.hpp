#pragma once

#include <stdexcept>
#include <string>

namespace wbloch {

// Thrown when a file cannot be opened or written.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a numerical contract is violated at runtime (eigensolver
// failure, unitarity defect above tolerance, non-Hermitian correlation
// input, ...). Distinct from argument validation, which uses
// std::invalid_argument.
struct NumericsError : std::runtime_error {
    explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a spectral profile is too flat or not unimodal for a
// half-maximum width to be defined.
struct SpectrumError : std::runtime_error {
    explicit SpectrumError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wbloch
