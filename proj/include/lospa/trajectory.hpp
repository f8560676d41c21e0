#pragma once

#include "lospa/types.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace labelled_ospa {

using TimeIndex = std::int64_t;

struct TimeStep {
    TimeIndex k;
    MultiTargetState state;
};

/// Time-ordered multitarget states with a fixed number of targets and a fixed
/// state dimension. Time indices are strictly increasing.
class Trajectory {
public:
    explicit Trajectory(std::vector<TimeStep> steps);

    [[nodiscard]] std::size_t size() const noexcept { return steps_.size(); }
    [[nodiscard]] std::size_t targets() const noexcept { return steps_.front().state.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return steps_.front().state.dim(); }
    [[nodiscard]] std::span<const TimeStep> steps() const noexcept { return steps_; }
    [[nodiscard]] const TimeStep* find(TimeIndex k) const noexcept;

private:
    std::vector<TimeStep> steps_;
};

enum class TrajectoryFormat { Csv, Json };

/// Shape supplied by the caller when a CSV file carries no `# t=.. nx=..` line.
/// When both are present they must agree.
struct ShapeHint {
    std::optional<std::size_t> targets;
    std::optional<std::size_t> dim;
};

/// CSV layout:
///
///     # t=3 nx=1
///     k,x_1_1,x_2_1,x_3_1
///     0,-10,0,10
///
/// One row per timestep, 1 + t*nx columns; x_j_i is coordinate i of target j.
/// Without a shape comment or hint, t and nx are read off the last header column.
[[nodiscard]] Trajectory parse_trajectory_csv(std::string_view text, const ShapeHint& hint = {});

/// JSON layout: {"t": 3, "nx": 1, "steps": [{"k": 0, "targets": [[-10], [0], [10]]}]}
[[nodiscard]] Trajectory parse_trajectory_json(std::string_view text, const ShapeHint& hint = {});

[[nodiscard]] Trajectory load_trajectory(const std::filesystem::path& path, TrajectoryFormat format,
                                         const ShapeHint& hint = {});

/// Csv unless the extension is .json.
[[nodiscard]] TrajectoryFormat format_from_extension(const std::filesystem::path& path);

} // namespace labelled_ospa
