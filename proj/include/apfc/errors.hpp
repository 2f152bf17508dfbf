#pragma once

#include <stdexcept>

namespace apfc {

// Fields that must share one grid disagree in shape or extent.
struct GridMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The amplitude quartic has no real minimizer (liquid-only regime).
struct NoRealSolutionError : std::domain_error {
    using std::domain_error::domain_error;
};

// An amplitude magnitude is too small for phase-based post-processing.
struct DegenerateAmplitudeError : std::domain_error {
    using std::domain_error::domain_error;
};

// A time step produced non-finite values; a smaller dt is advised.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace apfc
