#pragma once

#include "latincolor/group.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace latincolor {

struct Cell {
    int r = 0;
    int c = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell cell);

// An n x n array over symbols 0..n-1 with every row and column a permutation.
// Cayley tables additionally carry the row and column element orderings.
class LatinSquare {
public:
    explicit LatinSquare(const std::vector<std::vector<int>>& symbols);
    LatinSquare(const std::vector<std::vector<int>>& symbols, std::vector<int> row_order, std::vector<int> col_order);

    int order() const noexcept { return order_; }
    int symbol(int r, int c) const { return symbols_[static_cast<std::size_t>(r) * order_ + c]; }
    int symbol(Cell cell) const { return symbol(cell.r, cell.c); }
    bool contains(Cell cell) const noexcept { return cell.r >= 0 && cell.c >= 0 && cell.r < order_ && cell.c < order_; }

    const std::optional<std::vector<int>>& row_order() const noexcept { return row_order_; }
    const std::optional<std::vector<int>>& col_order() const noexcept { return col_order_; }

    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    int order_ = 0;
    std::vector<int> symbols_;
    std::optional<std::vector<int>> row_order_;
    std::optional<std::vector<int>> col_order_;
};

// A candidate partition of the cells of `square` into classes.
struct Coloring {
    LatinSquare square;
    std::vector<std::vector<Cell>> classes;

    std::size_t class_count() const noexcept { return classes.size(); }
};

enum class Coordinate { Row, Column, Symbol };
std::string_view to_string(Coordinate coord);

struct ClassViolation {
    std::size_t class_index;
    Cell first;
    Cell second;
    Coordinate shared;
};

struct ColoringReport {
    std::size_t class_count = 0;
    std::vector<ClassViolation> class_violations;
    std::vector<Cell> out_of_bounds;
    std::vector<Cell> uncovered;
    std::vector<Cell> multiply_covered;

    bool valid() const noexcept
    {
        return class_violations.empty() && out_of_bounds.empty() && uncovered.empty() && multiply_covered.empty();
    }
    std::string describe() const;
};

// Row, column and symbol multisets of a set of cells.
struct CellMaps {
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<int> symbols;

    static std::vector<int> support(std::span<const int> multiset);
    static bool is_simple(std::span<const int> multiset);
};

// symbols[i][j] = row_order[i] * col_order[j]; throws NotPermutation when an
// ordering is not a permutation of the elements.
LatinSquare cayley_table(const FiniteGroup& g);
LatinSquare cayley_table(const FiniteGroup& g, std::span<const int> row_order, std::span<const int> col_order);

// The cells (i, i + d mod n).
std::vector<Cell> right_diagonal(const LatinSquare& square, int d);

CellMaps cell_maps(const LatinSquare& square, std::span<const Cell> cells);
bool is_partial_transversal(const LatinSquare& square, std::span<const Cell> cells);

// Collects every violation instead of stopping at the first one.
ColoringReport verify_coloring(const Coloring& coloring);

struct IndexRange {
    int begin;
    int end;  // exclusive

    int size() const noexcept { return end - begin; }
};

struct Subsquare {
    LatinSquare square;          // re-indexed over its own symbols
    std::vector<int> symbols;    // local symbol -> symbol of the parent square
};

// Throws NotSubsquare unless the block is a latin subsquare of the parent.
Subsquare extract_block(const LatinSquare& square, IndexRange rows, IndexRange cols);

}  // namespace latincolor
