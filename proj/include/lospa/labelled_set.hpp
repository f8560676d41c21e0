#pragma once

#include "lospa/metric.hpp"
#include "lospa/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace labelled_ospa {

using Label = std::int64_t;

/// A target state carrying an explicit, immutable label.
class LabelledTarget {
public:
    LabelledTarget(TargetState state, Label label) : state_(std::move(state)), label_(label) {}

    [[nodiscard]] const TargetState& state() const noexcept { return state_; }
    [[nodiscard]] Label label() const noexcept { return label_; }

private:
    TargetState state_;
    Label label_;
};

/// Unordered collection of labelled targets with distinct labels and a common
/// state dimension. Elements are kept in insertion order, but nothing in the
/// public contract depends on that order.
///
/// Labels are integers. Only equality between labels matters to the metric,
/// and exact equality on integers is unambiguous.
class LabelledSet {
public:
    explicit LabelledSet(std::vector<LabelledTarget> elements);

    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return elements_.front().state().dim(); }
    [[nodiscard]] std::span<const LabelledTarget> elements() const noexcept { return elements_; }
    /// Labels in ascending order.
    [[nodiscard]] std::vector<Label> labels() const;
    [[nodiscard]] const LabelledTarget* find(Label label) const noexcept;

private:
    std::vector<LabelledTarget> elements_;
};

/// Attaches labels[j] to the j-th target of `x`.
[[nodiscard]] LabelledSet from_vector(const MultiTargetState& x, std::span<const Label> labels);

/// Position j of the result holds the state labelled label_order[j].
[[nodiscard]] MultiTargetState to_vector(const LabelledSet& set, std::span<const Label> label_order);

/// LOSPA evaluated directly on labelled sets: the label penalty applies when
/// the two paired elements carry different labels. Both sets must carry the
/// same labels. Equal to lospa() on to_vector() of both sets under any common
/// label ordering.
[[nodiscard]] double lospa_sets(const LabelledSet& a, const LabelledSet& b, const LospaParams& params,
                                const SolverOptions& options = {});

} // namespace labelled_ospa
