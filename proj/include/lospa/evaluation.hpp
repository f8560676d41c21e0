#pragma once

#include "lospa/metric.hpp"
#include "lospa/trajectory.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace labelled_ospa {

struct StepResult {
    TimeIndex k;
    double lospa;
    double ospa;
    Permutation optimal_perm;
};

/// Summaries over time. These are reporting conveniences; the metric itself
/// is defined per timestep.
struct Aggregates {
    double mean_lospa = 0.0;
    double max_lospa = 0.0;
    double mean_ospa = 0.0;
};

struct EvalReport {
    std::vector<StepResult> per_step;
    Aggregates aggregates;
    LospaParams params;
    SolverBackend backend;
    MetricKind kind;
};

/// Per-timestep d(estimate, truth) with `params`, plus the same with alpha = 0.
/// Both trajectories must cover the same time indices with the same t and nx.
[[nodiscard]] EvalReport evaluate(const Trajectory& truth, const Trajectory& estimate, const LospaParams& params,
                                  const SolverOptions& options = {});

/// Deterministic JSON rendering; every real is written with 17 significant
/// digits and permutations are 1-based.
[[nodiscard]] std::string report_to_json(const EvalReport& report);

struct EchoedParams {
    LospaParams params;
    SolverBackend backend;
};

/// Reads back the "params_echo" block of a report produced by report_to_json.
[[nodiscard]] EchoedParams params_from_report_json(std::string_view json_text);

/// One cell of the built-in three-target example: truth [-10, 0, 10],
/// p = 2, Euclidean base metric.
struct DemoCell {
    std::size_t row;
    std::vector<double> estimate;
    double alpha;
    double expected;
    double computed;
    double ospa;
};

struct DemoReport {
    std::vector<DemoCell> cells;

    [[nodiscard]] double max_abs_error() const noexcept;
    [[nodiscard]] bool passed(double tolerance = tolerance::kDemoAbs) const noexcept;
};

[[nodiscard]] DemoReport run_demo(const SolverOptions& options = {});
[[nodiscard]] std::string format_demo(const DemoReport& report);

} // namespace labelled_ospa
