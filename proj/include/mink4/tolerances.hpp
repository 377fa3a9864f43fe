#pragma once

namespace mink4::tol {

// Default tolerances, collected in one place. Each operation that consumes
// one also accepts it as a parameter; these are the documented defaults.

// Relative lightlike test: |<v,v>| <= tol * |v|^2_euclid.
inline constexpr double kLightlikeRel = 1e-9;

// Frame Gram residual bound (eps_frame).
inline constexpr double kFrame = 1e-9;

// Relative test for a lightlike mean curvature vector.
inline constexpr double kMarginallyTrappedRel = 1e-6;

// Absolute thresholds for point classification (nu, lambda, L, M, N) after
// normalizing the jet scale.
inline constexpr double kClassify = 1e-6;

// Finite-difference steps: first derivatives use kFdFirst * max(1, |u|),
// second derivatives kFdSecond * max(1, |u|). Error model O(h^2).
inline constexpr double kFdFirst = 1e-5;
inline constexpr double kFdSecond = 1e-4;

// Adaptive Simpson quadrature absolute tolerance.
inline constexpr double kQuadrature = 1e-12;

// Root finding (bisection + Newton) tolerance.
inline constexpr double kRoot = 1e-12;

// Compatibility residual: refuse integration above the first bound, warn
// above the second.
inline constexpr double kCompatibilityRefuse = 1e-3;
inline constexpr double kCompatibilityWarn = 1e-6;

// Frame re-orthonormalization cadence (integration steps).
inline constexpr int kReorthoEvery = 50;

} // namespace mink4::tol
