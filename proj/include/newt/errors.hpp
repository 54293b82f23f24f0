#pragma once

#include <stdexcept>
#include <string>

namespace newt {

struct ZeroVectorError : std::domain_error {
    ZeroVectorError() : std::domain_error("transverse Bloch vector is zero, phase undefined") {}
};

struct SingularOrdinateError : std::domain_error {
    explicit SingularOrdinateError(double v)
        : std::domain_error("ordinate " + std::to_string(v) + " too close to zero for hyperbolism") {}
};

struct NonpositiveDampingError : std::invalid_argument {
    NonpositiveDampingError() : std::invalid_argument("damping constant k must be > 0") {}
};

struct NonpositiveRadiusError : std::invalid_argument {
    NonpositiveRadiusError() : std::invalid_argument("amplitude radius r must be > 0") {}
};

struct ShapeMismatchError : std::invalid_argument {
    explicit ShapeMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct NonAbsorptiveError : std::invalid_argument {
    NonAbsorptiveError() : std::invalid_argument("core fraction requires a pure absorption line (phi = 0)") {}
};

struct NoHalfCrossingError : std::runtime_error {
    NoHalfCrossingError() : std::runtime_error("line never falls below half maximum within the grid") {}
};

struct OverflowGuardError : std::runtime_error {
    explicit OverflowGuardError(double arg)
        : std::runtime_error("exp argument " + std::to_string(arg) + " exceeds overflow bound") {}
};

struct RootBeyondSignalError : std::invalid_argument {
    RootBeyondSignalError() : std::invalid_argument("requested window root lies beyond the signal duration") {}
};

struct ShrinkForbiddenError : std::invalid_argument {
    ShrinkForbiddenError() : std::invalid_argument("zero fill target length smaller than signal length") {}
};

struct EmptyRegionError : std::invalid_argument {
    explicit EmptyRegionError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace newt
