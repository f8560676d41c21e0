#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace labelled_ospa {

/// State of a single target; finite coordinates, dimension n_x >= 1.
class TargetState {
public:
    explicit TargetState(Eigen::VectorXd coords);
    TargetState(std::initializer_list<double> coords);

    [[nodiscard]] const Eigen::VectorXd& coords() const noexcept { return coords_; }
    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(coords_.size()); }

    friend bool operator==(const TargetState& a, const TargetState& b) { return a.coords_ == b.coords_; }

private:
    Eigen::VectorXd coords_;
};

/// Ordered concatenation of t target states. The position of a target is its
/// label, so two states are compared position by position.
class MultiTargetState {
public:
    explicit MultiTargetState(std::vector<TargetState> targets);

    /// One-dimensional targets, one per value.
    static MultiTargetState from_scalars(std::span<const double> values);
    static MultiTargetState from_scalars(std::initializer_list<double> values);
    static MultiTargetState from_rows(const std::vector<std::vector<double>>& rows);

    [[nodiscard]] std::size_t size() const noexcept { return targets_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return targets_.front().dim(); }
    [[nodiscard]] const TargetState& operator[](std::size_t j) const { return targets_[j]; }
    [[nodiscard]] std::span<const TargetState> targets() const noexcept { return targets_; }

    friend bool operator==(const MultiTargetState&, const MultiTargetState&) = default;

private:
    std::vector<TargetState> targets_;
};

/// Metric b on R^{n_x}: Euclidean or a q-norm with q >= 1.
class BaseMetric {
public:
    enum class Kind { Euclidean, PNorm };

    static BaseMetric euclidean() noexcept { return BaseMetric(Kind::Euclidean, 2.0); }
    static BaseMetric pnorm(double q);
    /// Accepts "euclidean" or "pnorm:<q>".
    static BaseMetric parse(const std::string& text);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] double q() const noexcept { return q_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BaseMetric&, const BaseMetric&) = default;

private:
    BaseMetric(Kind kind, double q) noexcept : kind_(kind), q_(q) {}

    Kind kind_;
    double q_;
};

/// Exponent p in [1, inf), label penalty alpha >= 0 (in the units of b) and
/// the base metric. alpha == 0 degenerates to OSPA without cut-off.
class LospaParams {
public:
    LospaParams(double p, double alpha, BaseMetric metric = BaseMetric::euclidean());

    [[nodiscard]] double p() const noexcept { return p_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] const BaseMetric& metric() const noexcept { return metric_; }
    [[nodiscard]] LospaParams with_alpha(double alpha) const { return {p_, alpha, metric_}; }

    friend bool operator==(const LospaParams&, const LospaParams&) = default;

private:
    double p_;
    double alpha_;
    BaseMetric metric_;
};

/// Bijection on {0, ..., t-1}; element j is the column assigned to row j.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> mapping);

    static Permutation identity(std::size_t t);
    /// Builds from the 1-based notation used in reports.
    static Permutation from_one_based(std::span<const std::size_t> mapping);

    [[nodiscard]] std::size_t size() const noexcept { return mapping_.size(); }
    [[nodiscard]] std::size_t operator[](std::size_t j) const { return mapping_[j]; }
    [[nodiscard]] std::span<const std::size_t> mapping() const noexcept { return mapping_; }
    [[nodiscard]] std::vector<std::size_t> one_based() const;
    [[nodiscard]] bool is_identity() const noexcept;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> mapping_;
};

/// Dense square matrix of finite, nonnegative pairwise costs.
class CostMatrix {
public:
    explicit CostMatrix(Eigen::MatrixXd entries);
    CostMatrix(std::initializer_list<std::initializer_list<double>> rows);

    [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    [[nodiscard]] double operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    [[nodiscard]] const Eigen::MatrixXd& entries() const noexcept { return entries_; }

    /// Sum of the entries selected by `perm`, accumulated row by row.
    [[nodiscard]] double total(const Permutation& perm) const;

private:
    Eigen::MatrixXd entries_;
};

} // namespace labelled_ospa
