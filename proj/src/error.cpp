#include "latincolor/error.hpp"

namespace latincolor {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::NotSubsquare: return "NotSubsquare";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::SameCell: return "SameCell";
    case ErrorCode::NotLadder: return "NotLadder";
    case ErrorCode::NotNearAntipodal: return "NotNearAntipodal";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::K4Component: return "K4Component";
    case ErrorCode::WrongGroupClass: return "WrongGroupClass";
    case ErrorCode::InvalidInputColoring: return "InvalidInputColoring";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::Consistency: return "Consistency";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

Error::Error(ErrorCode code, const std::string& what, std::vector<std::pair<int, int>> cells)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), cells_(std::move(cells))
{
}

void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

}  // namespace latincolor
