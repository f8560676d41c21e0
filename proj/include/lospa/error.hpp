#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace labelled_ospa {

enum class ErrorCode {
    DimensionMismatch,
    CapExceeded,
    InvalidCost,
    InvalidParameter,
    NonFiniteValue,
    DuplicateLabel,
    LabelMismatch,
    ParseError,
    InconsistentShape,
    TimestepMismatch,
    IoError,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `record()` is set for input-file
/// errors and holds the 1-based line (CSV) or step index (JSON).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> record = std::nullopt);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] std::optional<std::size_t> record() const noexcept { return record_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> record_;
};

} // namespace labelled_ospa
