#include "latincolor/latin.hpp"

#include "latincolor/error.hpp"

#include <algorithm>
#include <sstream>

namespace latincolor {

namespace {

    void check_latin(int n, std::span<const int> symbols)
    {
        std::vector<char> row_seen(n), col_seen(n);
        for (int i = 0; i < n; ++i) {
            std::fill(row_seen.begin(), row_seen.end(), 0);
            std::fill(col_seen.begin(), col_seen.end(), 0);
            for (int j = 0; j < n; ++j) {
                const int a = symbols[static_cast<std::size_t>(i) * n + j];
                const int b = symbols[static_cast<std::size_t>(j) * n + i];
                if (a < 0 || a >= n || b < 0 || b >= n)
                    fail(ErrorCode::InvalidArgument, "symbol out of range");
                if (row_seen[a]++ || col_seen[b]++)
                    fail(ErrorCode::NotPermutation, "row or column of the square is not a permutation");
            }
        }
    }

    void check_ordering(std::span<const int> order, int n)
    {
        std::vector<char> seen(n, 0);
        if (static_cast<int>(order.size()) != n)
            fail(ErrorCode::NotPermutation, "ordering has the wrong length");
        for (int x : order) {
            if (x < 0 || x >= n || seen[x])
                fail(ErrorCode::NotPermutation, "ordering is not a permutation of the elements");
            seen[x] = 1;
        }
    }

    std::vector<int> flatten(const std::vector<std::vector<int>>& symbols)
    {
        const std::size_t n = symbols.size();
        std::vector<int> flat;
        flat.reserve(n * n);
        for (const auto& row : symbols) {
            if (row.size() != n)
                fail(ErrorCode::InvalidArgument, "square rows must have length n");
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return flat;
    }

}  // namespace

std::string to_string(Cell cell)
{
    return "(" + std::to_string(cell.r) + "," + std::to_string(cell.c) + ")";
}

std::string_view to_string(Coordinate coord)
{
    switch (coord) {
    case Coordinate::Row: return "row";
    case Coordinate::Column: return "column";
    case Coordinate::Symbol: return "symbol";
    }
    return "?";
}

LatinSquare::LatinSquare(const std::vector<std::vector<int>>& symbols)
    : order_(static_cast<int>(symbols.size())), symbols_(flatten(symbols))
{
    if (order_ == 0)
        fail(ErrorCode::InvalidArgument, "latin square must have order at least 1");
    check_latin(order_, symbols_);
}

LatinSquare::LatinSquare(const std::vector<std::vector<int>>& symbols, std::vector<int> row_order,
                         std::vector<int> col_order)
    : LatinSquare(symbols)
{
    check_ordering(row_order, order_);
    check_ordering(col_order, order_);
    row_order_ = std::move(row_order);
    col_order_ = std::move(col_order);
}

std::vector<std::vector<int>> LatinSquare::rows() const
{
    std::vector<std::vector<int>> out(order_);
    for (int r = 0; r < order_; ++r)
        out[r].assign(symbols_.begin() + static_cast<std::ptrdiff_t>(r) * order_,
                      symbols_.begin() + static_cast<std::ptrdiff_t>(r + 1) * order_);
    return out;
}

std::string ColoringReport::describe() const
{
    std::ostringstream os;
    os << "classes: " << class_count << "\n";
    for (const auto& v : class_violations)
        os << "class " << v.class_index << ": cells " << to_string(v.first) << " and " << to_string(v.second)
           << " share a " << to_string(v.shared) << "\n";
    for (const auto& c : out_of_bounds)
        os << "cell " << to_string(c) << " is out of bounds\n";
    for (const auto& c : uncovered)
        os << "cell " << to_string(c) << " is not covered\n";
    for (const auto& c : multiply_covered)
        os << "cell " << to_string(c) << " is covered more than once\n";
    os << "verdict: " << (valid() ? "valid" : "invalid") << "\n";
    return os.str();
}

std::vector<int> CellMaps::support(std::span<const int> multiset)
{
    std::vector<int> out(multiset.begin(), multiset.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool CellMaps::is_simple(std::span<const int> multiset)
{
    return support(multiset).size() == multiset.size();
}

LatinSquare cayley_table(const FiniteGroup& g)
{
    std::vector<int> order(g.order());
    for (int i = 0; i < g.order(); ++i)
        order[i] = i;
    return cayley_table(g, order, order);
}

LatinSquare cayley_table(const FiniteGroup& g, std::span<const int> row_order, std::span<const int> col_order)
{
    const int n = g.order();
    check_ordering(row_order, n);
    check_ordering(col_order, n);
    std::vector<std::vector<int>> symbols(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            symbols[i][j] = g.mul(row_order[i], col_order[j]);
    return LatinSquare(symbols, std::vector<int>(row_order.begin(), row_order.end()),
                       std::vector<int>(col_order.begin(), col_order.end()));
}

std::vector<Cell> right_diagonal(const LatinSquare& square, int d)
{
    const int n = square.order();
    if (d < 0 || d >= n)
        fail(ErrorCode::InvalidArgument, "diagonal index out of range");
    std::vector<Cell> cells;
    cells.reserve(n);
    for (int i = 0; i < n; ++i)
        cells.push_back({i, (i + d) % n});
    return cells;
}

CellMaps cell_maps(const LatinSquare& square, std::span<const Cell> cells)
{
    CellMaps maps;
    maps.rows.reserve(cells.size());
    maps.cols.reserve(cells.size());
    maps.symbols.reserve(cells.size());
    for (const Cell& cell : cells) {
        if (!square.contains(cell))
            fail(ErrorCode::InvalidArgument, "cell " + to_string(cell) + " out of bounds");
        maps.rows.push_back(cell.r);
        maps.cols.push_back(cell.c);
        maps.symbols.push_back(square.symbol(cell));
    }
    return maps;
}

bool is_partial_transversal(const LatinSquare& square, std::span<const Cell> cells)
{
    const CellMaps maps = cell_maps(square, cells);
    return CellMaps::is_simple(maps.rows) && CellMaps::is_simple(maps.cols) && CellMaps::is_simple(maps.symbols);
}

ColoringReport verify_coloring(const Coloring& coloring)
{
    const LatinSquare& square = coloring.square;
    const int n = square.order();
    ColoringReport report;
    report.class_count = coloring.classes.size();

    std::vector<int> cover(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> row_owner(n), col_owner(n), sym_owner(n);
    for (std::size_t k = 0; k < coloring.classes.size(); ++k) {
        const auto& cls = coloring.classes[k];
        std::fill(row_owner.begin(), row_owner.end(), -1);
        std::fill(col_owner.begin(), col_owner.end(), -1);
        std::fill(sym_owner.begin(), sym_owner.end(), -1);
        for (std::size_t idx = 0; idx < cls.size(); ++idx) {
            const Cell cell = cls[idx];
            if (!square.contains(cell)) {
                report.out_of_bounds.push_back(cell);
                continue;
            }
            ++cover[static_cast<std::size_t>(cell.r) * n + cell.c];
            const int s = square.symbol(cell);
            auto claim = [&](std::vector<int>& owner, int key, Coordinate coord) {
                if (owner[key] < 0)
                    owner[key] = static_cast<int>(idx);
                else
                    report.class_violations.push_back({k, cls[owner[key]], cell, coord});
            };
            claim(row_owner, cell.r, Coordinate::Row);
            claim(col_owner, cell.c, Coordinate::Column);
            claim(sym_owner, s, Coordinate::Symbol);
        }
    }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const int times = cover[static_cast<std::size_t>(r) * n + c];
            if (times == 0)
                report.uncovered.push_back({r, c});
            else if (times > 1)
                report.multiply_covered.push_back({r, c});
        }
    return report;
}

Subsquare extract_block(const LatinSquare& square, IndexRange rows, IndexRange cols)
{
    const int n = square.order();
    const int m = rows.size();
    if (m != cols.size())
        fail(ErrorCode::NotSubsquare, "row and column ranges differ in length");
    if (m <= 0 || rows.begin < 0 || cols.begin < 0 || rows.end > n || cols.end > n)
        fail(ErrorCode::NotSubsquare, "block ranges out of bounds");

    std::vector<int> symbols;
    for (int r = rows.begin; r < rows.end; ++r)
        for (int c = cols.begin; c < cols.end; ++c)
            symbols.push_back(square.symbol(r, c));
    symbols = CellMaps::support(symbols);
    if (static_cast<int>(symbols.size()) != m)
        fail(ErrorCode::NotSubsquare, "block uses " + std::to_string(symbols.size()) + " symbols, expected "
                                          + std::to_string(m));
    std::vector<int> local(n, -1);
    for (int i = 0; i < m; ++i)
        local[symbols[i]] = i;
    std::vector<std::vector<int>> block(m, std::vector<int>(m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            block[r][c] = local[square.symbol(rows.begin + r, cols.begin + c)];
    // m symbols in an m x m block of a latin square: rows and columns are
    // automatically permutations, but the constructor re-checks.
    return Subsquare{LatinSquare(block), std::move(symbols)};
}

}  // namespace latincolor
