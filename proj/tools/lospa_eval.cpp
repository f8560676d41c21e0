// lospa-eval: per-timestep LOSPA/OSPA between a ground-truth and an estimated
// trajectory, plus a built-in three-target demo.

#include "lospa/error.hpp"
#include "lospa/evaluation.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitDemoMismatch = 3;

std::size_t brute_force_cap_from_env() {
    const char* value = std::getenv("LOSPA_BRUTE_CAP");
    if (value == nullptr || *value == '\0') return labelled_ospa::kDefaultBruteForceCap;
    try {
        std::size_t used = 0;
        const unsigned long cap = std::stoul(value, &used);
        if (used == std::string(value).size()) return cap;
    } catch (const std::exception&) {
    }
    throw labelled_ospa::Error(labelled_ospa::ErrorCode::InvalidParameter,
                       std::string("LOSPA_BRUTE_CAP must be a nonnegative integer, got '") + value + "'");
}

struct ComputeArgs {
    std::string truth;
    std::string estimate;
    double p = 2.0;
    double alpha = 1.0;
    std::string metric = "euclidean";
    std::string backend = "optimal";
    std::string format;
    std::string out;
    std::optional<std::size_t> targets;
    std::optional<std::size_t> dim;
};

int run_compute(const ComputeArgs& args) {
    const labelled_ospa::LospaParams params(args.p, args.alpha, labelled_ospa::BaseMetric::parse(args.metric));
    labelled_ospa::SolverOptions options;
    options.backend = args.backend == "brute" ? labelled_ospa::SolverBackend::BruteForce
                                              : labelled_ospa::SolverBackend::OptimalAssignment;
    options.brute_force_cap = brute_force_cap_from_env();

    const labelled_ospa::ShapeHint hint{args.targets, args.dim};
    const auto format_of = [&](const std::string& path) {
        if (args.format.empty()) return labelled_ospa::format_from_extension(path);
        return args.format == "json" ? labelled_ospa::TrajectoryFormat::Json : labelled_ospa::TrajectoryFormat::Csv;
    };
    const auto truth = labelled_ospa::load_trajectory(args.truth, format_of(args.truth), hint);
    const auto estimate = labelled_ospa::load_trajectory(args.estimate, format_of(args.estimate), hint);

    const std::string json = labelled_ospa::report_to_json(labelled_ospa::evaluate(truth, estimate, params, options));
    if (args.out.empty()) {
        std::cout << json;
    } else {
        std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
        out << json;
        if (!out) throw labelled_ospa::Error(labelled_ospa::ErrorCode::IoError, "cannot write '" + args.out + "'");
    }
    return kExitOk;
}

int run_demo() {
    const auto report = labelled_ospa::run_demo();
    std::cout << labelled_ospa::format_demo(report);
    return report.passed() ? kExitOk : kExitDemoMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Labelled OSPA evaluation for a fixed, known number of targets"};
    app.require_subcommand(1);

    ComputeArgs args;
    auto* compute = app.add_subcommand("compute", "Evaluate an estimated trajectory against ground truth");
    compute->add_option("--truth", args.truth, "Ground-truth trajectory file")->required();
    compute->add_option("--est", args.estimate, "Estimated trajectory file")->required();
    compute->add_option("--p", args.p, "Exponent p, 1 <= p < inf")->required();
    compute->add_option("--alpha", args.alpha, "Label-error penalty alpha >= 0 (0 gives OSPA)")->required();
    compute->add_option("--metric", args.metric, "Base metric: euclidean or pnorm:<q>")->required();
    compute->add_option("--backend", args.backend, "Assignment backend")
        ->check(CLI::IsMember({"brute", "optimal"}))
        ->capture_default_str();
    compute->add_option("--format", args.format, "Input format (default: from file extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    compute->add_option("--out", args.out, "Write the JSON report here instead of stdout");
    compute->add_option("--t", args.targets, "Number of targets, when the CSV has no shape comment");
    compute->add_option("--nx", args.dim, "State dimension, when the CSV has no shape comment");

    auto* demo = app.add_subcommand("demo", "Reproduce the three-estimate reference example");
    auto* version = app.add_subcommand("version", "Print the version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*compute) return run_compute(args);
        if (*demo) return run_demo();
        if (*version) {
            std::cout << "lospa-eval " << kVersion << "\n";
            return kExitOk;
        }
    } catch (const labelled_ospa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
