#pragma once

#include <cstddef>

// Numeric tolerances shared by the library, its tests and the documentation.
namespace labelled_ospa::tolerance {

/// Symmetry of the metric and vector/set-domain equivalence.
inline constexpr double kSymmetryRel = 1e-12;
inline constexpr double kSetEquivalenceAbs = 1e-12;
/// Re-summing the returned permutation against t * distance^p.
inline constexpr double kPermutationCostRel = 1e-12;
/// Exhaustive vs polynomial assignment, relative to (1 + cost).
inline constexpr double kBackendAgreementRel = 1e-10;
/// Absolute slack allowed on the triangle inequality.
inline constexpr double kTriangleAbs = 1e-9;
/// Built-in demo gate against the published reference values.
inline constexpr double kDemoAbs = 1e-9;
/// OSPA degeneracy of the demo scenario.
inline constexpr double kOspaDemoAbs = 1e-12;
/// Slack on "non-decreasing in alpha", relative to (1 + distance).
inline constexpr double kMonotoneRel = 1e-12;

} // namespace labelled_ospa::tolerance

namespace labelled_ospa {

/// Largest t the exhaustive solver accepts unless overridden (8! = 40320).
inline constexpr std::size_t kDefaultBruteForceCap = 8;

} // namespace labelled_ospa
