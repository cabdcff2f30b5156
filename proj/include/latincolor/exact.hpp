#pragma once

#include "latincolor/latin.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace latincolor {

// Budgets count backtracking nodes so results do not depend on the machine.
inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultChromaticBudget = 100'000'000;

// LATIN_BUDGET, when set to a positive number (e.g. "1e9"), replaces `fallback`.
std::uint64_t budget_from_env(std::uint64_t fallback);
// Positive node count, scientific notation allowed; nullopt when malformed.
std::optional<std::uint64_t> parse_budget(std::string_view text);

enum class SearchStatus { Found, NotFound, BudgetExhausted };
std::string_view to_string(SearchStatus status);

struct TransversalSearch {
    SearchStatus status = SearchStatus::NotFound;
    std::vector<Cell> cells;  // sorted by row when found
    std::uint64_t nodes = 0;
};

// A partial transversal with exactly `size` cells.
TransversalSearch find_partial_transversal(const LatinSquare& square, int size,
                                           std::uint64_t budget = kDefaultSearchBudget);
TransversalSearch find_transversal(const LatinSquare& square, std::uint64_t budget = kDefaultSearchBudget);
TransversalSearch find_near_transversal(const LatinSquare& square, std::uint64_t budget = kDefaultSearchBudget);

struct MaxPartialTransversal {
    int size = 0;
    bool proven = false;  // false when a budget ran out; size is then only a lower bound
    std::vector<Cell> witness;
    std::uint64_t nodes = 0;  // summed over the per-size searches
};

MaxPartialTransversal max_partial_transversal(const LatinSquare& square, std::uint64_t budget = kDefaultSearchBudget);

struct PartitionSearch {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Coloring> coloring;  // n transversals; class j holds cell (0, j)
    std::uint64_t nodes = 0;
};

PartitionSearch partition_into_transversals(const LatinSquare& square, std::uint64_t budget = kDefaultSearchBudget);

struct ChromaticResult {
    enum class LowerBound { CliqueN, ExhaustedK };

    int value = 0;
    Coloring coloring;  // witness with exactly `value` classes
    LowerBound lower_bound = LowerBound::CliqueN;
    int lower_bound_k = 0;  // n for CliqueN; the largest exhausted k otherwise
};

std::string_view to_string(ChromaticResult::LowerBound kind);

struct ChromaticOutcome {
    std::optional<ChromaticResult> result;  // absent when undecided or no k <= max_k works
    bool budget_exhausted = false;
    int lower = 0;             // proven lower bound
    std::optional<int> upper;  // class count of the best coloring found
    std::optional<Coloring> best;
    std::uint64_t nodes = 0;
};

// Largest admissible max_k: 3n - 3 for n >= 3, n^2 for smaller squares.
int chromatic_upper_limit(int n);

// Smallest k in [n, max_k] with a k-coloring. Saturation-ordered branch and
// bound: row 0 is pre-colored 0..n-1 and class sizes are capped by the
// largest partial transversal. max_k <= 0 selects chromatic_upper_limit(n).
ChromaticOutcome exact_chromatic(const LatinSquare& square, int max_k = 0,
                                 std::uint64_t budget = kDefaultChromaticBudget);

}  // namespace latincolor
