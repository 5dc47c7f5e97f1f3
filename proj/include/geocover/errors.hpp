#pragma once

#include <stdexcept>
#include <string>

namespace geocover {

// Thrown when raw input fails polygon validation.
class ValidationError : public std::runtime_error {
public:
    enum class Code {
        TooFewVertices,
        SelfIntersecting,
        DuplicateVertex,
        ZeroArea,
    };

    ValidationError(Code code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

class PointOutsidePolygon : public std::runtime_error {
public:
    explicit PointOutsidePolygon(std::string msg) : std::runtime_error(std::move(msg)) {}
};

class SegmentOutsidePolygon : public std::runtime_error {
public:
    explicit SegmentOutsidePolygon(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// A root bracketing / certification step failed to converge. Never swallowed:
// callers either retry with a fallback or abort the run.
class NumericalCertificationFailure : public std::runtime_error {
public:
    explicit NumericalCertificationFailure(std::string msg)
        : std::runtime_error(std::move(msg)) {}
};

} // namespace geocover
