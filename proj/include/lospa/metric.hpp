#pragma once

#include "lospa/assignment.hpp"
#include "lospa/constants.hpp"
#include "lospa/types.hpp"

namespace labelled_ospa {

enum class SolverBackend { BruteForce, OptimalAssignment };

struct SolverOptions {
    SolverBackend backend = SolverBackend::OptimalAssignment;
    std::size_t brute_force_cap = kDefaultBruteForceCap;
};

/// LOSPA proper needs alpha > 0. With alpha == 0 the same formula is the
/// OSPA metric without cut-off and results are tagged accordingly.
enum class MetricKind { Lospa, Ospa };

struct LospaResult {
    double distance = 0.0;
    Permutation optimal_perm;
    MetricKind kind = MetricKind::Lospa;
};

/// b(x, y) for the metric selected in `params`.
[[nodiscard]] double base_distance(const TargetState& x, const TargetState& y, const LospaParams& params);

/// entry(j, k) = b(a_j, b_k)^p + alpha^p * [j != k].
[[nodiscard]] CostMatrix build_cost_matrix(const MultiTargetState& a, const MultiTargetState& b,
                                           const LospaParams& params);

/// Labelled OSPA between two multitarget state vectors:
///
///     d(A, B) = ( (1/t) min_phi sum_j [ b^p(a_j, b_phi(j)) + alpha^p [j != phi(j)] ] )^(1/p)
///
/// The minimum over the t! permutations is solved as a linear assignment on
/// build_cost_matrix(a, b, params).
[[nodiscard]] LospaResult lospa(const MultiTargetState& a, const MultiTargetState& b,
                                const LospaParams& params, const SolverOptions& options = {});

/// Distance from an already minimised total cost: (total / t)^(1/p).
[[nodiscard]] double distance_from_total(double total_cost, std::size_t t, double p);

/// OSPA without cut-off; lospa() with alpha forced to 0.
[[nodiscard]] double ospa_no_cutoff(const MultiTargetState& a, const MultiTargetState& b, double p,
                                    const BaseMetric& metric = BaseMetric::euclidean(),
                                    const SolverOptions& options = {});

[[nodiscard]] const char* to_string(MetricKind kind) noexcept;
[[nodiscard]] const char* to_string(SolverBackend backend) noexcept;

} // namespace labelled_ospa
