#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symskew {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point fell outside the domain of the map being applied, or an orbit
/// reached the endpoint-identification ambiguity at an interval boundary.
struct OutOfDomain : Error {
    using Error::Error;
};

struct NonPositiveLength : Error {
    using Error::Error;
};

struct NotBijective : Error {
    using Error::Error;
};

struct Reducible : Error {
    using Error::Error;
};

/// Rauzy-Veech induction is undefined: the two candidate intervals have
/// equal length. Carries the depth at which the tie occurred.
struct TieNotDefined : Error {
    std::int64_t depth;
    explicit TieNotDefined(std::int64_t depth_)
        : Error("Rauzy-Veech tie at depth " + std::to_string(depth_)), depth(depth_) {}
};

/// height_ratio_bound called on a path whose matrix is not positive.
struct NotPositive : Error {
    using Error::Error;
};

struct SamplingExhausted : Error {
    using Error::Error;
};

struct ClaimViolation : Error {
    using Error::Error;
};

/// A discontinuity of S_h f crosses the interior of a tower floor; the
/// certificate cannot be issued.
struct DiscontinuityInXi : Error {
    using Error::Error;
};

} // namespace symskew
