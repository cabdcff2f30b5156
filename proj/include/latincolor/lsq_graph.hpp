#pragma once

#include "latincolor/latin.hpp"

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace latincolor {

// Cells of a latin square viewed as vertices of its latin square graph: two
// distinct cells are adjacent iff they share a row, a column or a symbol.
// The graph is never materialized; adjacency is read off the coordinates.

enum class EdgeKind { None, Row, Column, Symbol };

EdgeKind edge_kind(const LatinSquare& square, Cell a, Cell b);
bool are_adjacent(const LatinSquare& square, Cell a, Cell b);

// Rim: a Hamilton cycle of length 2h alternating row and column edges.
// Rungs: the h symbol edges, each joining rim positions p and p + h.
struct LadderCertificate {
    std::vector<Cell> rim;
    std::vector<std::pair<Cell, Cell>> rungs;

    int half() const noexcept { return static_cast<int>(rim.size() / 2); }
    std::optional<int> position(Cell cell) const;
    int rim_distance(Cell a, Cell b) const;
};

// Walks the alternating row/column cycle from the lexicographically smallest
// cell (leaving it along its row edge) and checks that the remaining edges of
// the induced subgraph are exactly the rungs. Throws NotLadder otherwise.
LadderCertificate recognize_mobius_ladder(const LatinSquare& square, std::span<const Cell> cells);

// Proper 2-coloring of the ladder minus a near-antipodal pair {u, v}, built
// greedily clockwise from the rim successor of u. sides[0] holds that
// successor. Throws NotNearAntipodal when rim distance is not half - 1.
std::array<std::vector<Cell>, 2> two_color_after_deletion(const LadderCertificate& cert, Cell u, Cell v);

// Proper 3-coloring of a cubic induced subgraph by saturation-ordered
// backtracking per connected component. Throws NotCubic, or K4Component with
// the four offending cells.
std::array<std::vector<Cell>, 3> three_color_cubic(const LatinSquare& square, std::span<const Cell> cells);

}  // namespace latincolor
