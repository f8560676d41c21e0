#include "lospa/metric.hpp"

#include "lospa/error.hpp"

#include <fmt/format.h>

#include <cmath>

namespace labelled_ospa {

namespace {

void require_same_shape(const MultiTargetState& a, const MultiTargetState& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("target counts differ: {} vs {}", a.size(), b.size()));
    }
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("state dimensions differ: {} vs {}", a.dim(), b.dim()));
    }
}

} // namespace

double base_distance(const TargetState& x, const TargetState& y, const LospaParams& params) {
    if (x.dim() != y.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("state dimensions differ: {} vs {}", x.dim(), y.dim()));
    }
    const Eigen::VectorXd diff = x.coords() - y.coords();
    const BaseMetric& metric = params.metric();
    switch (metric.kind()) {
    case BaseMetric::Kind::Euclidean:
        return diff.norm();
    case BaseMetric::Kind::PNorm: {
        const double q = metric.q();
        if (q == 1.0) return diff.cwiseAbs().sum();
        // Scale by the largest component so the q-th powers cannot overflow.
        const double scale = diff.cwiseAbs().maxCoeff();
        if (scale == 0.0) return 0.0;
        const double sum = (diff.cwiseAbs() / scale).array().pow(q).sum();
        return scale * std::pow(sum, 1.0 / q);
    }
    }
    return 0.0;
}

CostMatrix build_cost_matrix(const MultiTargetState& a, const MultiTargetState& b,
                             const LospaParams& params) {
    require_same_shape(a, b);
    const auto t = static_cast<Eigen::Index>(a.size());
    const double p = params.p();
    const double penalty = std::pow(params.alpha(), p);
    Eigen::MatrixXd entries(t, t);
    for (Eigen::Index j = 0; j < t; ++j) {
        for (Eigen::Index k = 0; k < t; ++k) {
            const double d = base_distance(a[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(k)], params);
            entries(j, k) = std::pow(d, p) + (j == k ? 0.0 : penalty);
        }
    }
    return CostMatrix(std::move(entries));
}

double distance_from_total(double total_cost, std::size_t t, double p) {
    return std::pow(total_cost / static_cast<double>(t), 1.0 / p);
}

LospaResult lospa(const MultiTargetState& a, const MultiTargetState& b, const LospaParams& params,
                  const SolverOptions& options) {
    const CostMatrix cost = build_cost_matrix(a, b, params);
    AssignmentSolution solution = options.backend == SolverBackend::BruteForce
                                      ? solve_brute_force(cost, options.brute_force_cap)
                                      : solve_optimal(cost);
    return {distance_from_total(solution.total_cost, cost.size(), params.p()), std::move(solution.perm),
            params.alpha() > 0.0 ? MetricKind::Lospa : MetricKind::Ospa};
}

double ospa_no_cutoff(const MultiTargetState& a, const MultiTargetState& b, double p, const BaseMetric& metric,
                      const SolverOptions& options) {
    return lospa(a, b, LospaParams(p, 0.0, metric), options).distance;
}

const char* to_string(MetricKind kind) noexcept {
    return kind == MetricKind::Lospa ? "LOSPA" : "OSPA";
}

const char* to_string(SolverBackend backend) noexcept {
    return backend == SolverBackend::BruteForce ? "brute" : "optimal";
}

} // namespace labelled_ospa
