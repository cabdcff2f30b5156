#pragma once

// Independent oracles for the tests: everything here is written directly
// from the definitions, without reusing library code beyond symbol lookup.

#include "latincolor/group.hpp"
#include "latincolor/latin.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using latincolor::Cell;
using latincolor::FiniteGroup;
using latincolor::LatinSquare;

inline std::string golden_path(const std::string& name) { return std::string(LATINCOLOR_GOLDEN_DIR) + "/" + name; }

inline std::vector<Cell> read_cells(const std::string& name)
{
    std::ifstream in(golden_path(name));
    std::vector<Cell> out;
    int r, c;
    while (in >> r >> c)
        out.push_back({r, c});
    return out;
}

inline std::vector<std::vector<std::string>> read_table(const std::string& name)
{
    std::ifstream in(golden_path(name));
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::vector<std::string> row;
        std::string tok;
        while (ls >> tok)
            row.push_back(tok);
        out.push_back(row);
    }
    return out;
}

inline std::string strip_times(std::string s)
{
    const std::string times = "×";
    for (auto p = s.find(times); p != std::string::npos; p = s.find(times))
        s.erase(p, times.size());
    return s;
}

inline int brute_order(const FiniteGroup& g, int x)
{
    int y = x, d = 1;
    while (y != g.identity()) {
        y = g.mul(y, x);
        ++d;
    }
    return d;
}

inline int two_part(int n)
{
    int t = 1;
    while (n % (2 * t) == 0)
        t *= 2;
    return t;
}

inline bool brute_cyclic_sylow2(const FiniteGroup& g)
{
    const int t = two_part(g.order());
    if (t == 1)
        return false;
    for (int x = 0; x < g.order(); ++x)
        if (brute_order(g, x) == t)
            return true;
    return false;
}

inline bool group_axioms(const FiniteGroup& g)
{
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        if (g.mul(g.identity(), a) != a || g.mul(a, g.identity()) != a)
            return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    return false;
    for (int a = 0; a < n; ++a) {
        std::set<int> row, col;
        for (int b = 0; b < n; ++b) {
            row.insert(g.mul(a, b));
            col.insert(g.mul(b, a));
        }
        if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n)
            return false;
    }
    return true;
}

// Pairwise check from the definition of a partial transversal.
inline bool pairwise_independent(const LatinSquare& sq, const std::vector<Cell>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            const Cell a = cells[i], b = cells[j];
            if (a.r == b.r || a.c == b.c || sq.symbol(a) == sq.symbol(b))
                return false;
        }
    return true;
}

// Partition of all n^2 cells into pairwise independent classes.
inline bool is_proper_coloring(const latincolor::Coloring& col)
{
    const int n = col.square.order();
    std::vector<int> hit(n * n, 0);
    for (const auto& cls : col.classes) {
        for (const Cell& c : cls) {
            if (c.r < 0 || c.c < 0 || c.r >= n || c.c >= n)
                return false;
            ++hit[c.r * n + c.c];
        }
        if (!pairwise_independent(col.square, cls))
            return false;
    }
    for (int h : hit)
        if (h != 1)
            return false;
    return true;
}

// Plain backtracking for a transversal in the native Cayley table: no
// bitmasks, no ordering heuristics.
inline bool has_transversal(const FiniteGroup& g)
{
    const int n = g.order();
    std::vector<char> used_col(n), used_sym(n);
    auto rec = [&](auto&& self, int r) -> bool {
        if (r == n)
            return true;
        for (int c = 0; c < n; ++c) {
            const int s = g.mul(r, c);
            if (used_col[c] || used_sym[s])
                continue;
            used_col[c] = used_sym[s] = 1;
            if (self(self, r + 1))
                return true;
            used_col[c] = used_sym[s] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

// Subgraph of the latin square graph induced on `cells`: degree of each cell.
inline std::vector<int> induced_degrees(const LatinSquare& sq, const std::vector<Cell>& cells)
{
    std::vector<int> deg(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (i == j)
                continue;
            const Cell a = cells[i], b = cells[j];
            if (a.r == b.r || a.c == b.c || sq.symbol(a) == sq.symbol(b))
                ++deg[i];
        }
    return deg;
}

}  // namespace oracle
