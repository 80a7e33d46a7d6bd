#pragma once

#include <stdexcept>
#include <string>

namespace hs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point expected inside the open unit disk was not.
struct NotInDisk : Error {
    using Error::Error;
};

// A multiplier expected on the unit circle was not.
struct NotUnimodular : Error {
    using Error::Error;
};

// The map failed the disk-automorphism form check.
struct NotAutomorphism : Error {
    using Error::Error;
};

// Boundary sampling found |g| != 1 on the circle.
struct NotInner : Error {
    using Error::Error;
};

// Evaluation hit a pole of the rational map.
struct PoleAt : Error {
    using Error::Error;
};

// Quadrature radius encloses a pole.
struct PoleInsideRadius : Error {
    using Error::Error;
};

// A composed or constructed rational map is not analytic at the origin.
struct ComposedPoleAtOrigin : Error {
    using Error::Error;
};

// Arithmetic between truncated series of different depths.
struct DepthMismatch : Error {
    using Error::Error;
};

// Tail bound above threshold even at the maximum escalated depth.
struct DepthInsufficient : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};

// The obstruction pipeline is undefined for a fixed point at the origin.
struct FixedPointAtOrigin : Error {
    using Error::Error;
};

struct SingularSystem : Error {
    using Error::Error;
};

// Independent computation routes disagree beyond tolerance.
struct InternalMismatch : Error {
    using Error::Error;
};

}  // namespace hs
