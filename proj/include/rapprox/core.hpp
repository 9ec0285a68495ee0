#pragma once

#include <complex>

namespace rapprox {

using Complex = std::complex<double>;

// Poles with modulus above this threshold are reported as poles at infinity.
inline constexpr double kPoleInfinityThreshold = 1e8;

// Generalized eigenvalues above this modulus (or with vanishing beta) are
// treated as structurally infinite when filtering pencil spectra.
inline constexpr double kStructuralInfinityThreshold = 1e12;

// Relative snap distance for barycentric evaluation at a support point.
inline constexpr double kSupportSnapTolerance = 1e-13;

// Relative distance below which interpolation nodes count as colliding.
inline constexpr double kNodeCollisionTolerance = 1e-8;

// Max relative residual under which an approximant is considered an exact
// reproduction of the sampled function.
inline constexpr double kExactReproductionTolerance = 1e-13;

inline constexpr const char* kToolName = "rapprox";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace rapprox
