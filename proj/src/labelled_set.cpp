#include "lospa/labelled_set.hpp"

#include "lospa/error.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <cmath>
#include <set>

namespace labelled_ospa {

LabelledSet::LabelledSet(std::vector<LabelledTarget> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "labelled set needs at least one element");
    }
    const std::size_t nx = elements_.front().state().dim();
    std::set<Label> seen;
    for (const auto& e : elements_) {
        if (!seen.insert(e.label()).second) {
            throw Error(ErrorCode::DuplicateLabel, fmt::format("label {} appears more than once", e.label()));
        }
        if (e.state().dim() != nx) {
            throw Error(ErrorCode::DimensionMismatch,
                        fmt::format("label {} has dimension {}, expected {}", e.label(), e.state().dim(), nx));
        }
    }
}

std::vector<Label> LabelledSet::labels() const {
    std::vector<Label> out;
    out.reserve(elements_.size());
    for (const auto& e : elements_) out.push_back(e.label());
    std::sort(out.begin(), out.end());
    return out;
}

const LabelledTarget* LabelledSet::find(Label label) const noexcept {
    auto it = std::find_if(elements_.begin(), elements_.end(),
                           [label](const LabelledTarget& e) { return e.label() == label; });
    return it == elements_.end() ? nullptr : &*it;
}

LabelledSet from_vector(const MultiTargetState& x, std::span<const Label> labels) {
    if (labels.size() != x.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("{} labels for {} targets", labels.size(), x.size()));
    }
    std::vector<LabelledTarget> elements;
    elements.reserve(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) elements.emplace_back(x[j], labels[j]);
    return LabelledSet(std::move(elements));
}

MultiTargetState to_vector(const LabelledSet& set, std::span<const Label> label_order) {
    if (label_order.size() != set.size()) {
        throw Error(ErrorCode::LabelMismatch,
                    fmt::format("label order has {} entries, set has {} elements", label_order.size(), set.size()));
    }
    std::set<Label> used;
    std::vector<TargetState> targets;
    targets.reserve(set.size());
    for (Label l : label_order) {
        const LabelledTarget* e = set.find(l);
        if (e == nullptr) throw Error(ErrorCode::LabelMismatch, fmt::format("label {} is not in the set", l));
        if (!used.insert(l).second) {
            throw Error(ErrorCode::LabelMismatch, fmt::format("label {} repeated in label order", l));
        }
        targets.push_back(e->state());
    }
    return MultiTargetState(std::move(targets));
}

double lospa_sets(const LabelledSet& a, const LabelledSet& b, const LospaParams& params,
                  const SolverOptions& options) {
    if (a.labels() != b.labels()) {
        throw Error(ErrorCode::LabelMismatch,
                    fmt::format("label sets differ: {{{}}} vs {{{}}}", fmt::join(a.labels(), ","),
                                fmt::join(b.labels(), ",")));
    }
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("state dimensions differ: {} vs {}", a.dim(), b.dim()));
    }

    // Pair elements in storage order; the penalty depends on label equality
    // rather than on position.
    const auto t = static_cast<Eigen::Index>(a.size());
    const double p = params.p();
    const double penalty = std::pow(params.alpha(), p);
    const auto ea = a.elements();
    const auto eb = b.elements();
    Eigen::MatrixXd entries(t, t);
    for (Eigen::Index j = 0; j < t; ++j) {
        const auto& x = ea[static_cast<std::size_t>(j)];
        for (Eigen::Index k = 0; k < t; ++k) {
            const auto& y = eb[static_cast<std::size_t>(k)];
            const double d = base_distance(x.state(), y.state(), params);
            entries(j, k) = std::pow(d, p) + (x.label() == y.label() ? 0.0 : penalty);
        }
    }
    const CostMatrix cost(std::move(entries));
    const AssignmentSolution solution = options.backend == SolverBackend::BruteForce
                                            ? solve_brute_force(cost, options.brute_force_cap)
                                            : solve_optimal(cost);
    return distance_from_total(solution.total_cost, a.size(), p);
}

} // namespace labelled_ospa
