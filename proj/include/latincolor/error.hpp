#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latincolor {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    NotPermutation,
    NotSubsquare,
    NotSubgroup,
    NotClosed,
    NotNormal,
    NotCoprime,
    SameCell,
    NotLadder,
    NotNearAntipodal,
    NotCubic,
    K4Component,
    WrongGroupClass,
    InvalidInputColoring,
    SearchExhausted,
    BudgetExhausted,
    Consistency,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception. The code lets
// callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    Error(ErrorCode code, const std::string& what, std::vector<std::pair<int, int>> cells);

    ErrorCode code() const noexcept { return code_; }

    // Offending cells as (row, col), when the failure has a cell witness
    // (e.g. the four cells of a K4 component).
    const std::vector<std::pair<int, int>>& cells() const noexcept { return cells_; }

private:
    ErrorCode code_;
    std::vector<std::pair<int, int>> cells_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace latincolor
