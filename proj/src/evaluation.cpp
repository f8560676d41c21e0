#include "lospa/evaluation.hpp"

#include "lospa/error.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace labelled_ospa {

namespace {

std::string real(double v) { return fmt::format("{:.17g}", v); }

std::vector<TimeIndex> missing_from(const Trajectory& have, const Trajectory& want) {
    std::vector<TimeIndex> out;
    for (const auto& step : want.steps()) {
        if (have.find(step.k) == nullptr) out.push_back(step.k);
    }
    return out;
}

SolverBackend parse_backend(const std::string& name) {
    if (name == "brute") return SolverBackend::BruteForce;
    if (name == "optimal") return SolverBackend::OptimalAssignment;
    throw Error(ErrorCode::ParseError, fmt::format("unknown backend '{}'", name));
}

} // namespace

EvalReport evaluate(const Trajectory& truth, const Trajectory& estimate, const LospaParams& params,
                    const SolverOptions& options) {
    if (truth.targets() != estimate.targets() || truth.dim() != estimate.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("truth has t={} nx={}, estimate has t={} nx={}", truth.targets(), truth.dim(),
                                estimate.targets(), estimate.dim()));
    }
    const auto missing_in_estimate = missing_from(estimate, truth);
    const auto missing_in_truth = missing_from(truth, estimate);
    if (!missing_in_estimate.empty() || !missing_in_truth.empty()) {
        throw Error(ErrorCode::TimestepMismatch,
                    fmt::format("missing from estimate: [{}]; missing from truth: [{}]",
                                fmt::join(missing_in_estimate, ","), fmt::join(missing_in_truth, ",")));
    }

    const LospaParams ospa_params = params.with_alpha(0.0);
    EvalReport report{{}, {}, params, options.backend, params.alpha() > 0.0 ? MetricKind::Lospa : MetricKind::Ospa};
    report.per_step.reserve(truth.size());
    for (const auto& step : estimate.steps()) {
        const MultiTargetState& truth_state = truth.find(step.k)->state;
        LospaResult labelled = lospa(step.state, truth_state, params, options);
        const double ospa = params.alpha() > 0.0 ? lospa(step.state, truth_state, ospa_params, options).distance
                                                 : labelled.distance;
        report.per_step.push_back({step.k, labelled.distance, ospa, std::move(labelled.optimal_perm)});
    }

    double sum_lospa = 0.0;
    double sum_ospa = 0.0;
    for (const auto& s : report.per_step) {
        sum_lospa += s.lospa;
        sum_ospa += s.ospa;
        report.aggregates.max_lospa = std::max(report.aggregates.max_lospa, s.lospa);
    }
    const auto n = static_cast<double>(report.per_step.size());
    report.aggregates.mean_lospa = sum_lospa / n;
    report.aggregates.mean_ospa = sum_ospa / n;
    return report;
}

std::string report_to_json(const EvalReport& report) {
    const LospaParams& params = report.params;
    std::string out;
    out += "{\n";
    out += fmt::format("  \"kind\": \"{}\",\n", to_string(report.kind));
    out += "  \"params_echo\": {\n";
    out += fmt::format("    \"p\": {},\n", real(params.p()));
    out += fmt::format("    \"alpha\": {},\n", real(params.alpha()));
    out += fmt::format("    \"metric\": \"{}\",\n", params.metric().to_string());
    out += fmt::format("    \"backend\": \"{}\"\n", to_string(report.backend));
    out += "  },\n";
    out += "  \"per_step\": [";
    for (std::size_t i = 0; i < report.per_step.size(); ++i) {
        const StepResult& s = report.per_step[i];
        out += i == 0 ? "\n" : ",\n";
        out += fmt::format("    {{\"k\": {}, \"lospa\": {}, \"ospa\": {}, \"optimal_perm\": [{}]}}", s.k,
                           real(s.lospa), real(s.ospa), fmt::join(s.optimal_perm.one_based(), ", "));
    }
    out += "\n  ],\n";
    out += "  \"aggregates\": {\n";
    out += "    \"note\": \"time aggregates are a reporting convenience, not part of the per-timestep metric\",\n";
    out += fmt::format("    \"mean_lospa\": {},\n", real(report.aggregates.mean_lospa));
    out += fmt::format("    \"max_lospa\": {},\n", real(report.aggregates.max_lospa));
    out += fmt::format("    \"mean_ospa\": {}\n", real(report.aggregates.mean_ospa));
    out += "  }\n";
    out += "}\n";
    return out;
}

EchoedParams params_from_report_json(std::string_view json_text) {
    using nlohmann::json;
    try {
        const json doc = json::parse(json_text);
        const json& echo = doc.at("params_echo");
        return {LospaParams(echo.at("p").get<double>(), echo.at("alpha").get<double>(),
                            BaseMetric::parse(echo.at("metric").get<std::string>())),
                parse_backend(echo.at("backend").get<std::string>())};
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, fmt::format("report params_echo: {}", e.what()));
    }
}

double DemoReport::max_abs_error() const noexcept {
    double worst = 0.0;
    for (const auto& c : cells) worst = std::max(worst, std::abs(c.computed - c.expected));
    return worst;
}

bool DemoReport::passed(double tolerance) const noexcept {
    return std::all_of(cells.begin(), cells.end(),
                       [tolerance](const DemoCell& c) { return std::abs(c.computed - c.expected) <= tolerance; });
}

DemoReport run_demo(const SolverOptions& options) {
    // Same locations as the truth, different labellings: every estimate sits
    // 0.1 from a true target, only the label assignment changes.
    const auto truth = MultiTargetState::from_scalars({-10.0, 0.0, 10.0});
    struct Row {
        std::vector<double> estimate;
        double expected_small_alpha;
        double expected_unit_alpha;
    };
    const std::vector<Row> rows = {
        {{-10.1, 0.1, 10.1}, 0.1, 0.1},
        {{0.1, -10.1, 10.1}, std::sqrt(0.1 * 0.1 + 0.02 / 3.0), std::sqrt(0.1 * 0.1 + 2.0 / 3.0)},
        {{10.1, -10.1, 0.1}, std::sqrt(0.1 * 0.1 + 0.03 / 3.0), std::sqrt(0.1 * 0.1 + 3.0 / 3.0)},
    };

    DemoReport report;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto estimate = MultiTargetState::from_scalars(rows[r].estimate);
        const double ospa = ospa_no_cutoff(estimate, truth, 2.0, BaseMetric::euclidean(), options);
        for (const auto& [alpha, expected] :
             {std::pair{0.1, rows[r].expected_small_alpha}, std::pair{1.0, rows[r].expected_unit_alpha}}) {
            const double computed = lospa(estimate, truth, LospaParams(2.0, alpha), options).distance;
            report.cells.push_back({r + 1, rows[r].estimate, alpha, expected, computed, ospa});
        }
    }
    return report;
}

std::string format_demo(const DemoReport& report) {
    std::string out = "truth = [-10, 0, 10], p = 2, euclidean base metric\n";
    out += fmt::format("{:<4} {:<22} {:>6} {:>20} {:>20} {:>10} {:>8}\n", "row", "estimate", "alpha", "expected",
                       "computed", "abs_err", "ospa");
    for (const auto& c : report.cells) {
        out += fmt::format("{:<4} {:<22} {:>6} {:>20.17g} {:>20.17g} {:>10.2e} {:>8.4g}\n", c.row,
                           fmt::format("[{}]", fmt::join(c.estimate, ", ")), c.alpha, c.expected, c.computed,
                           std::abs(c.computed - c.expected), c.ospa);
    }
    out += fmt::format("max abs error {:.3e} (tolerance {:.0e}): {}\n", report.max_abs_error(), tolerance::kDemoAbs,
                       report.passed() ? "PASS" : "FAIL");
    return out;
}

} // namespace labelled_ospa
