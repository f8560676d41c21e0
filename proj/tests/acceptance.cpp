// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "lospa/assignment.hpp"
#include "lospa/constants.hpp"
#include "lospa/evaluation.hpp"
#include "lospa/labelled_set.hpp"
#include "lospa/metric.hpp"

#include "cli_runner.hpp"
#include "oracle.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace labelled_ospa;
using labelled_ospa::testing::random_matrix;
using labelled_ospa::testing::random_points;
using labelled_ospa::testing::to_cost_matrix;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

const auto kTruth = MultiTargetState::from_scalars({-10.0, 0.0, 10.0});
const std::vector<MultiTargetState> kEstimates = {
    MultiTargetState::from_scalars({-10.1, 0.1, 10.1}),
    MultiTargetState::from_scalars({0.1, -10.1, 10.1}),
    MultiTargetState::from_scalars({10.1, -10.1, 0.1}),
};

const double kPs[] = {1.0, 1.5, 2.0, 3.0};
const double kAlphas[] = {0.0, 0.1, 1.0, 10.0};

BaseMetric pick_metric(std::mt19937_64& rng) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return BaseMetric::pnorm(1.0);
    case 1: return BaseMetric::pnorm(3.0);
    default: return BaseMetric::euclidean();
    }
}

// Random states; with some probability targets are copied from `near` and
// perturbed so that triples contain close and permuted configurations too.
MultiTargetState random_state(std::mt19937_64& rng, std::size_t t, std::size_t nx,
                              const MultiTargetState* near = nullptr) {
    auto pts = random_points(rng, t, nx);
    if (near != nullptr && std::bernoulli_distribution(0.5)(rng)) {
        std::normal_distribution<double> jitter(0.0, 0.3);
        std::vector<std::size_t> order(t);
        for (std::size_t j = 0; j < t; ++j) order[j] = j;
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t j = 0; j < t; ++j) {
            for (std::size_t i = 0; i < nx; ++i) {
                pts[j][i] = (*near)[order[j]].coords()(static_cast<Eigen::Index>(i)) + jitter(rng);
            }
        }
    }
    return MultiTargetState::from_rows(pts);
}

Outcome table_reproduction() {
    const double expected[3][2] = {
        {0.1, 0.1},
        {std::sqrt(0.1 * 0.1 + 0.02 / 3.0), std::sqrt(0.1 * 0.1 + 2.0 / 3.0)},
        {std::sqrt(0.1 * 0.1 + 0.03 / 3.0), std::sqrt(1.01)},
    };
    const double alphas[2] = {0.1, 1.0};
    double worst = 0.0;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            const double d = lospa(kEstimates[r], kTruth, LospaParams(2.0, alphas[c])).distance;
            worst = std::max(worst, std::abs(d - expected[r][c]));
        }
    }
    const auto demo = run_demo();
    worst = std::max(worst, demo.max_abs_error());
    return {worst <= tolerance::kDemoAbs && demo.passed(),
            fmt::format("max abs error {:.3e} over 6 cells (tol {:.0e})", worst, tolerance::kDemoAbs)};
}

Outcome ospa_degeneracy() {
    double worst = 0.0;
    for (const auto& est : kEstimates) {
        for (const auto backend : {SolverBackend::OptimalAssignment, SolverBackend::BruteForce}) {
            const double d = ospa_no_cutoff(est, kTruth, 2.0, BaseMetric::euclidean(), SolverOptions{backend, 8});
            worst = std::max(worst, std::abs(d - 0.1));
        }
    }
    return {worst <= tolerance::kOspaDemoAbs, fmt::format("max |ospa - 0.1| = {:.3e} (tol {:.0e})", worst,
                                                           tolerance::kOspaDemoAbs)};
}

Outcome metric_axioms() {
    constexpr int kTriples = 12000;
    std::mt19937_64 rng(0x105fa);
    int identity_fail = 0;
    int symmetry_fail = 0;
    int triangle_fail = 0;
    double worst_sym = 0.0;
    double worst_tri = -INFINITY;
    for (int n = 0; n < kTriples; ++n) {
        const std::size_t t = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const std::size_t nx = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const LospaParams params(kPs[n % 4], kAlphas[(n / 4) % 4], pick_metric(rng));
        const auto x = random_state(rng, t, nx);
        const auto z = random_state(rng, t, nx, &x);
        const auto y = random_state(rng, t, nx, &z);

        if (lospa(x, x, params).distance != 0.0 || lospa(y, y, params).distance != 0.0) ++identity_fail;

        const double xy = lospa(x, y, params).distance;
        const double sym = std::abs(xy - lospa(y, x, params).distance) / (1.0 + xy);
        worst_sym = std::max(worst_sym, sym);
        if (sym > tolerance::kSymmetryRel) ++symmetry_fail;

        const double excess = xy - (lospa(x, z, params).distance + lospa(z, y, params).distance);
        worst_tri = std::max(worst_tri, excess);
        if (excess > tolerance::kTriangleAbs) ++triangle_fail;
    }
    return {identity_fail == 0 && symmetry_fail == 0 && triangle_fail == 0,
            fmt::format("{} triples; identity fails {}, symmetry fails {} (worst rel {:.2e}), triangle fails {} "
                        "(worst excess {:.2e})",
                        kTriples, identity_fail, symmetry_fail, worst_sym, triangle_fail, worst_tri)};
}

Outcome oracle_equivalence() {
    constexpr int kCases = 6000;
    std::mt19937_64 rng(0x0c1e);
    int failures = 0;
    double worst = 0.0;
    for (int n = 0; n < kCases; ++n) {
        const std::size_t t = 1 + static_cast<std::size_t>(n % 7);
        CostMatrix cost = [&] {
            if (n % 2 == 0) return to_cost_matrix(random_matrix(rng, t, n % 3 == 0 ? 1.0 : 1000.0));
            const std::size_t nx = 1 + static_cast<std::size_t>(n % 3);
            const LospaParams params(kPs[n % 4], kAlphas[(n / 2) % 4]);
            const auto a = random_state(rng, t, nx);
            return build_cost_matrix(a, random_state(rng, t, nx, &a), params);
        }();
        const double fast = solve_optimal(cost).total_cost;
        const double exact = solve_brute_force(cost, 7).total_cost;
        const double rel = std::abs(fast - exact) / (1.0 + exact);
        worst = std::max(worst, rel);
        if (rel > tolerance::kBackendAgreementRel) ++failures;
    }
    return {failures == 0, fmt::format("{} cases t<=7; mismatches {}, worst rel {:.2e} (tol {:.0e})", kCases, failures,
                                       worst, tolerance::kBackendAgreementRel)};
}

Outcome set_equivalence() {
    constexpr int kPairs = 1500;
    std::mt19937_64 rng(0xc0de);
    int failures = 0;
    double worst = 0.0;
    std::size_t comparisons = 0;
    for (int n = 0; n < kPairs; ++n) {
        const std::size_t t = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const std::size_t nx = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        const LospaParams params(kPs[n % 4], kAlphas[(n / 4) % 4], pick_metric(rng));

        std::vector<Label> labels(t);
        std::uniform_int_distribution<Label> any_label(-1000, 1000);
        for (std::size_t j = 0; j < t; ++j) {
            do {
                labels[j] = any_label(rng);
            } while (std::find(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(j), labels[j]) !=
                     labels.begin() + static_cast<std::ptrdiff_t>(j));
        }
        const auto xa = random_state(rng, t, nx);
        const auto xb = random_state(rng, t, nx, &xa);

        // Shuffled storage order on both sides.
        auto build = [&](const MultiTargetState& x, const std::vector<Label>& l) {
            std::vector<LabelledTarget> elems;
            for (std::size_t j = 0; j < t; ++j) elems.emplace_back(x[j], l[j]);
            std::shuffle(elems.begin(), elems.end(), rng);
            return LabelledSet(std::move(elems));
        };
        const auto a = build(xa, labels);
        const auto b = build(xb, labels);
        const double set_value = lospa_sets(a, b, params);

        // Injective relabelling applied to both sets.
        std::vector<Label> relabelled(t);
        for (std::size_t j = 0; j < t; ++j) relabelled[j] = 7919 * labels[j] + 13;
        const double relabelled_value = lospa_sets(build(xa, relabelled), build(xb, relabelled), params);

        std::vector<std::vector<Label>> orders;
        std::vector<Label> order = a.labels();
        if (t <= 4) {
            do orders.push_back(order);
            while (std::next_permutation(order.begin(), order.end()));
        } else {
            for (int k = 0; k < 8; ++k) {
                std::shuffle(order.begin(), order.end(), rng);
                orders.push_back(order);
            }
        }
        for (const auto& l : orders) {
            const double vec_value = lospa(to_vector(a, l), to_vector(b, l), params).distance;
            for (double v : {set_value, relabelled_value}) {
                const double diff = std::abs(v - vec_value);
                worst = std::max(worst, diff);
                ++comparisons;
                if (diff > tolerance::kSetEquivalenceAbs) ++failures;
            }
        }
    }
    return {failures == 0, fmt::format("{} set pairs, {} comparisons; failures {}, worst abs {:.2e} (tol {:.0e})",
                                       kPairs, comparisons, failures, worst, tolerance::kSetEquivalenceAbs)};
}

Outcome alpha_ordering() {
    const LospaParams unit(2.0, 1.0);
    const double r1 = lospa(kEstimates[0], kTruth, unit).distance;
    const double r2 = lospa(kEstimates[1], kTruth, unit).distance;
    const double r3 = lospa(kEstimates[2], kTruth, unit).distance;
    const bool ordered = r1 < r2 && r2 < r3;

    constexpr int kCases = 3000;
    const double grid[] = {0.0, 0.5, 1.0, 2.0};
    std::mt19937_64 rng(0xa1fa);
    int violations = 0;
    for (int n = 0; n < kCases; ++n) {
        const std::size_t t = 1 + static_cast<std::size_t>(n % 6);
        const std::size_t nx = 1 + static_cast<std::size_t>(n % 4);
        const auto a = random_state(rng, t, nx);
        const auto b = random_state(rng, t, nx, &a);
        const double p = kPs[n % 4];
        double previous = -1.0;
        for (double alpha : grid) {
            const double d = lospa(a, b, LospaParams(p, alpha)).distance;
            if (d < previous - tolerance::kMonotoneRel * (1.0 + previous)) ++violations;
            previous = d;
        }
    }
    return {ordered && violations == 0,
            fmt::format("alpha=1: {:.7f} < {:.7f} < {:.7f} {}; {} random cases, violations {}", r1, r2, r3,
                        ordered ? "holds" : "VIOLATED", kCases, violations)};
}

Outcome report_determinism() {
    const auto dir = labelled_ospa::testing::scratch_dir("acceptance");
    const auto first = dir / "first.json";
    const auto second = dir / "second.json";
    const std::string args = "compute --truth '" + labelled_ospa::testing::data_file("truth_2d.csv").string() + "' --est '" +
                             labelled_ospa::testing::data_file("est_2d.json").string() +
                             "' --p 1.5 --alpha 0.3 --metric pnorm:3 --backend optimal --out ";
    const auto a = labelled_ospa::testing::run_cli(args + "'" + first.string() + "'");
    const auto b = labelled_ospa::testing::run_cli(args + "'" + second.string() + "'");
    const std::string ja = labelled_ospa::testing::read_file(first);
    const std::string jb = labelled_ospa::testing::read_file(second);
    std::filesystem::remove_all(dir);
    const bool ok = a.exit_code == 0 && b.exit_code == 0 && !ja.empty() && ja == jb;
    return {ok, fmt::format("exit codes {}/{}, report sizes {}/{} bytes, identical: {}", a.exit_code, b.exit_code,
                            ja.size(), jb.size(), ja == jb ? "yes" : "no")};
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1 reference table reproduction", table_reproduction},
        {"2 OSPA degeneracy", ospa_degeneracy},
        {"3 metric axioms", metric_axioms},
        {"4 oracle equivalence", oracle_equivalence},
        {"5 set/vector equivalence", set_equivalence},
        {"6 alpha ordering and monotonicity", alpha_ordering},
        {"7 report determinism", report_determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        fmt::print("[{}] {:<36} {:>9.1f} ms  {}\n", outcome.passed ? "PASS" : "FAIL", c.name, ms, outcome.detail);
        if (!outcome.passed) ++failed;
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
