#include "lospa/trajectory.hpp"

#include "lospa/error.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace labelled_ospa {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return !text.empty() && ec == std::errc{} && ptr == end;
}

// Reads "t=<int>" and "nx=<int>" tokens from a comment line.
void read_shape_comment(std::string_view comment, ShapeHint& shape, std::size_t line_no) {
    std::istringstream in{std::string(comment)};
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string_view key = std::string_view(token).substr(0, eq);
        if (key != "t" && key != "nx") continue;
        std::size_t value = 0;
        if (!parse_number(std::string_view(token).substr(eq + 1), value) || value == 0) {
            throw Error(ErrorCode::ParseError, fmt::format("line {}: bad shape token '{}'", line_no, token),
                        line_no);
        }
        (key == "t" ? shape.targets : shape.dim) = value;
    }
}

void merge_hint(ShapeHint& shape, const ShapeHint& hint) {
    const auto merge = [](std::optional<std::size_t>& declared, const std::optional<std::size_t>& given,
                          const char* name) {
        if (!given) return;
        if (declared && *declared != *given) {
            throw Error(ErrorCode::InconsistentShape,
                        fmt::format("file declares {}={} but {}={} was requested", name, *declared, name, *given));
        }
        declared = given;
    };
    merge(shape.targets, hint.targets, "t");
    merge(shape.dim, hint.dim, "nx");
}

// Parses "x_<j>_<i>" into (j, i).
bool parse_column_name(std::string_view name, std::size_t& j, std::size_t& i) {
    if (!name.starts_with("x_")) return false;
    name.remove_prefix(2);
    const auto sep = name.find('_');
    if (sep == std::string_view::npos) return false;
    return parse_number(name.substr(0, sep), j) && parse_number(name.substr(sep + 1), i) && j > 0 && i > 0;
}

std::string expected_column(std::size_t index, std::size_t nx) {
    return fmt::format("x_{}_{}", index / nx + 1, index % nx + 1);
}

} // namespace

Trajectory::Trajectory(std::vector<TimeStep> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw Error(ErrorCode::ParseError, "trajectory has no timesteps");
    const std::size_t t = steps_.front().state.size();
    const std::size_t nx = steps_.front().state.dim();
    for (std::size_t s = 0; s < steps_.size(); ++s) {
        const auto& step = steps_[s];
        if (step.state.size() != t || step.state.dim() != nx) {
            throw Error(ErrorCode::InconsistentShape,
                        fmt::format("timestep k={} has t={} nx={}, expected t={} nx={}", step.k, step.state.size(),
                                    step.state.dim(), t, nx),
                        s + 1);
        }
        if (s > 0 && step.k <= steps_[s - 1].k) {
            throw Error(ErrorCode::ParseError,
                        fmt::format("time index {} does not increase after {}", step.k, steps_[s - 1].k), s + 1);
        }
    }
}

const TimeStep* Trajectory::find(TimeIndex k) const noexcept {
    auto it = std::lower_bound(steps_.begin(), steps_.end(), k,
                               [](const TimeStep& s, TimeIndex key) { return s.k < key; });
    return (it != steps_.end() && it->k == k) ? &*it : nullptr;
}

Trajectory parse_trajectory_csv(std::string_view text, const ShapeHint& hint) {
    ShapeHint shape;
    std::vector<std::string_view> header;
    std::size_t header_line = 0;
    std::vector<TimeStep> steps;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        const std::string_view raw =
            text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (header.empty()) read_shape_comment(line.substr(1), shape, line_no);
            continue;
        }

        if (header.empty()) {
            header = split(line, ',');
            header_line = line_no;
            if (header.front() != "k") {
                throw Error(ErrorCode::ParseError,
                            fmt::format("line {}: header must start with column 'k'", line_no), line_no);
            }
            merge_hint(shape, hint);
            const std::size_t value_cols = header.size() - 1;
            if (value_cols == 0) {
                throw Error(ErrorCode::ParseError, fmt::format("line {}: header has no state columns", line_no),
                            line_no);
            }
            if (!shape.targets || !shape.dim) {
                std::size_t j = 0;
                std::size_t i = 0;
                if (!parse_column_name(header.back(), j, i)) {
                    throw Error(ErrorCode::ParseError,
                                fmt::format("line {}: cannot infer t and nx from column '{}'", line_no,
                                            header.back()),
                                line_no);
                }
                if (!shape.targets) shape.targets = j;
                if (!shape.dim) shape.dim = i;
            }
            if (value_cols != *shape.targets * *shape.dim) {
                throw Error(ErrorCode::InconsistentShape,
                            fmt::format("line {}: {} state columns but t={} nx={} needs {}", line_no, value_cols,
                                        *shape.targets, *shape.dim, *shape.targets * *shape.dim),
                            line_no);
            }
            for (std::size_t c = 0; c < value_cols; ++c) {
                if (header[c + 1] != expected_column(c, *shape.dim)) {
                    throw Error(ErrorCode::ParseError,
                                fmt::format("line {}: column {} is '{}', expected '{}'", line_no, c + 2,
                                            header[c + 1], expected_column(c, *shape.dim)),
                                line_no);
                }
            }
            continue;
        }

        const auto cells = split(line, ',');
        if (cells.size() != header.size()) {
            throw Error(ErrorCode::InconsistentShape,
                        fmt::format("line {}: {} columns, header on line {} has {}", line_no, cells.size(),
                                    header_line, header.size()),
                        line_no);
        }
        TimeIndex k = 0;
        if (!parse_number(cells[0], k)) {
            throw Error(ErrorCode::ParseError, fmt::format("line {}: bad time index '{}'", line_no, cells[0]),
                        line_no);
        }
        const std::size_t t = *shape.targets;
        const std::size_t nx = *shape.dim;
        std::vector<TargetState> targets;
        targets.reserve(t);
        for (std::size_t j = 0; j < t; ++j) {
            Eigen::VectorXd coords(static_cast<Eigen::Index>(nx));
            for (std::size_t i = 0; i < nx; ++i) {
                const std::string_view cell = cells[1 + j * nx + i];
                double v = 0.0;
                if (!parse_number(cell, v)) {
                    throw Error(ErrorCode::ParseError,
                                fmt::format("line {}: bad number '{}' in column {}", line_no, cell, header[1 + j * nx + i]),
                                line_no);
                }
                if (!std::isfinite(v)) {
                    throw Error(ErrorCode::NonFiniteValue,
                                fmt::format("line {}: non-finite value in column {}", line_no, header[1 + j * nx + i]),
                                line_no);
                }
                coords(static_cast<Eigen::Index>(i)) = v;
            }
            targets.emplace_back(std::move(coords));
        }
        steps.push_back({k, MultiTargetState(std::move(targets))});
        if (steps.size() > 1 && steps.back().k <= steps[steps.size() - 2].k) {
            throw Error(ErrorCode::ParseError,
                        fmt::format("line {}: time index {} does not increase", line_no, k), line_no);
        }
    }

    if (header.empty()) throw Error(ErrorCode::ParseError, "missing header line");
    if (steps.empty()) throw Error(ErrorCode::ParseError, "no timestep rows", header_line);
    return Trajectory(std::move(steps));
}

Trajectory parse_trajectory_json(std::string_view text, const ShapeHint& hint) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, fmt::format("invalid JSON at byte {}", e.byte));
    } catch (const json::out_of_range& e) {
        // Number literals outside the double range.
        throw Error(ErrorCode::NonFiniteValue, e.what());
    }

    ShapeHint shape;
    std::vector<TimeStep> steps;
    std::size_t record = 0;
    try {
        shape.targets = doc.at("t").get<std::size_t>();
        shape.dim = doc.at("nx").get<std::size_t>();
        merge_hint(shape, hint);
        const std::size_t t = *shape.targets;
        const std::size_t nx = *shape.dim;

        for (const auto& step : doc.at("steps")) {
            ++record;
            const auto k = step.at("k").get<TimeIndex>();
            const auto& list = step.at("targets");
            if (!list.is_array() || list.size() != t) {
                throw Error(ErrorCode::InconsistentShape,
                            fmt::format("step {} (k={}): {} targets, expected t={}", record, k,
                                        list.is_array() ? list.size() : 0, t),
                            record);
            }
            std::vector<TargetState> targets;
            targets.reserve(t);
            for (const auto& target : list) {
                if (!target.is_array() || target.size() != nx) {
                    throw Error(ErrorCode::InconsistentShape,
                                fmt::format("step {} (k={}): target of dimension {}, expected nx={}", record, k,
                                            target.is_array() ? target.size() : 0, nx),
                                record);
                }
                Eigen::VectorXd coords(static_cast<Eigen::Index>(nx));
                for (std::size_t i = 0; i < nx; ++i) {
                    const double v = target[i].get<double>();
                    if (!std::isfinite(v)) {
                        throw Error(ErrorCode::NonFiniteValue,
                                    fmt::format("step {} (k={}): non-finite coordinate", record, k), record);
                    }
                    coords(static_cast<Eigen::Index>(i)) = v;
                }
                targets.emplace_back(std::move(coords));
            }
            steps.push_back({k, MultiTargetState(std::move(targets))});
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError,
                    record > 0 ? fmt::format("step {}: {}", record, e.what()) : std::string(e.what()),
                    record > 0 ? std::optional<std::size_t>(record) : std::nullopt);
    }
    return Trajectory(std::move(steps));
}

Trajectory load_trajectory(const std::filesystem::path& path, TrajectoryFormat format, const ShapeHint& hint) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, fmt::format("cannot open '{}'", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    return format == TrajectoryFormat::Json ? parse_trajectory_json(text, hint) : parse_trajectory_csv(text, hint);
}

TrajectoryFormat format_from_extension(const std::filesystem::path& path) {
    return path.extension() == ".json" ? TrajectoryFormat::Json : TrajectoryFormat::Csv;
}

} // namespace labelled_ospa
