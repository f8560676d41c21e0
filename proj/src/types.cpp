#include "lospa/types.hpp"

#include "lospa/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>

namespace labelled_ospa {

namespace {

Eigen::VectorXd to_vector(std::initializer_list<double> values) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) v(i++) = x;
    return v;
}

bool parse_double(std::string_view text, double& out) {
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

} // namespace

TargetState::TargetState(Eigen::VectorXd coords) : coords_(std::move(coords)) {
    if (coords_.size() < 1) {
        throw Error(ErrorCode::DimensionMismatch, "target state needs at least one coordinate");
    }
    if (!coords_.allFinite()) {
        throw Error(ErrorCode::NonFiniteValue, "target state has a non-finite coordinate");
    }
}

TargetState::TargetState(std::initializer_list<double> coords) : TargetState(to_vector(coords)) {}

MultiTargetState::MultiTargetState(std::vector<TargetState> targets) : targets_(std::move(targets)) {
    if (targets_.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "multitarget state needs at least one target");
    }
    const std::size_t nx = targets_.front().dim();
    for (std::size_t j = 1; j < targets_.size(); ++j) {
        if (targets_[j].dim() != nx) {
            throw Error(ErrorCode::DimensionMismatch,
                        fmt::format("target {} has dimension {}, target 1 has {}", j + 1,
                                    targets_[j].dim(), nx));
        }
    }
}

MultiTargetState MultiTargetState::from_scalars(std::span<const double> values) {
    std::vector<TargetState> targets;
    targets.reserve(values.size());
    for (double v : values) targets.emplace_back(TargetState{v});
    return MultiTargetState(std::move(targets));
}

MultiTargetState MultiTargetState::from_scalars(std::initializer_list<double> values) {
    return from_scalars(std::span<const double>(values.begin(), values.size()));
}

MultiTargetState MultiTargetState::from_rows(const std::vector<std::vector<double>>& rows) {
    std::vector<TargetState> targets;
    targets.reserve(rows.size());
    for (const auto& row : rows) {
        targets.emplace_back(Eigen::Map<const Eigen::VectorXd>(row.data(),
                                                               static_cast<Eigen::Index>(row.size())));
    }
    return MultiTargetState(std::move(targets));
}

BaseMetric BaseMetric::pnorm(double q) {
    if (!std::isfinite(q) || q < 1.0) {
        throw Error(ErrorCode::InvalidParameter, fmt::format("q-norm requires finite q >= 1, got {}", q));
    }
    return BaseMetric(Kind::PNorm, q);
}

BaseMetric BaseMetric::parse(const std::string& text) {
    if (text == "euclidean") return euclidean();
    constexpr std::string_view prefix = "pnorm:";
    if (text.starts_with(prefix)) {
        double q = 0.0;
        if (parse_double(std::string_view(text).substr(prefix.size()), q)) return pnorm(q);
    }
    throw Error(ErrorCode::InvalidParameter,
                fmt::format("unknown base metric '{}' (expected euclidean or pnorm:<q>)", text));
}

std::string BaseMetric::to_string() const {
    if (kind_ == Kind::Euclidean) return "euclidean";
    return fmt::format("pnorm:{:.17g}", q_);
}

LospaParams::LospaParams(double p, double alpha, BaseMetric metric)
    : p_(p), alpha_(alpha), metric_(metric) {
    if (!std::isfinite(p) || p < 1.0) {
        throw Error(ErrorCode::InvalidParameter, fmt::format("p must satisfy 1 <= p < inf, got {}", p));
    }
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw Error(ErrorCode::InvalidParameter, fmt::format("alpha must be finite and >= 0, got {}", alpha));
    }
}

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (std::size_t v : mapping_) {
        if (v >= mapping_.size() || seen[v]) {
            throw Error(ErrorCode::InvalidParameter, "mapping is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t t) {
    std::vector<std::size_t> m(t);
    for (std::size_t j = 0; j < t; ++j) m[j] = j;
    return Permutation(std::move(m));
}

Permutation Permutation::from_one_based(std::span<const std::size_t> mapping) {
    std::vector<std::size_t> m;
    m.reserve(mapping.size());
    for (std::size_t v : mapping) {
        if (v == 0) throw Error(ErrorCode::InvalidParameter, "1-based permutation contains 0");
        m.push_back(v - 1);
    }
    return Permutation(std::move(m));
}

std::vector<std::size_t> Permutation::one_based() const {
    std::vector<std::size_t> m(mapping_);
    for (auto& v : m) ++v;
    return m;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t j = 0; j < mapping_.size(); ++j) {
        if (mapping_[j] != j) return false;
    }
    return true;
}

CostMatrix::CostMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("cost matrix must be square and non-empty, got {}x{}", entries_.rows(),
                                entries_.cols()));
    }
    for (Eigen::Index r = 0; r < entries_.rows(); ++r) {
        for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
            const double v = entries_(r, c);
            if (!std::isfinite(v) || v < 0.0) {
                throw Error(ErrorCode::InvalidCost,
                            fmt::format("entry ({}, {}) = {} is not a finite nonnegative cost", r + 1, c + 1, v));
            }
        }
    }
}

CostMatrix::CostMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : CostMatrix([&] {
          const auto n = static_cast<Eigen::Index>(rows.size());
          Eigen::MatrixXd m(n, n);
          Eigen::Index r = 0;
          for (const auto& row : rows) {
              if (static_cast<Eigen::Index>(row.size()) != n) {
                  throw Error(ErrorCode::DimensionMismatch, "cost matrix rows must all have length t");
              }
              Eigen::Index c = 0;
              for (double v : row) m(r, c++) = v;
              ++r;
          }
          return m;
      }()) {}

double CostMatrix::total(const Permutation& perm) const {
    if (perm.size() != size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("permutation of size {} for a {}x{} matrix", perm.size(), size(), size()));
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < perm.size(); ++j) sum += (*this)(j, perm[j]);
    return sum;
}

} // namespace labelled_ospa
