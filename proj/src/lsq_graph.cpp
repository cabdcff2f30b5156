#include "latincolor/lsq_graph.hpp"

#include "latincolor/error.hpp"

#include <algorithm>
#include <map>

namespace latincolor {

namespace {

    void check_cells(const LatinSquare& square, std::span<const Cell> cells)
    {
        std::vector<Cell> sorted(cells.begin(), cells.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ErrorCode::InvalidArgument, "cell set contains duplicates");
        for (const Cell& c : cells)
            if (!square.contains(c))
                fail(ErrorCode::InvalidArgument, "cell " + to_string(c) + " out of bounds");
    }

    // Induced adjacency lists, grouped by the coordinate that is shared.
    struct InducedGraph {
        std::vector<std::vector<int>> row, col, sym;
    };

    InducedGraph induce(const LatinSquare& square, std::span<const Cell> cells)
    {
        const int n = square.order();
        const int v = static_cast<int>(cells.size());
        InducedGraph g;
        g.row.resize(v);
        g.col.resize(v);
        g.sym.resize(v);
        std::vector<std::vector<int>> by_row(n), by_col(n), by_sym(n);
        for (int i = 0; i < v; ++i) {
            by_row[cells[i].r].push_back(i);
            by_col[cells[i].c].push_back(i);
            by_sym[square.symbol(cells[i])].push_back(i);
        }
        auto link = [](const std::vector<std::vector<int>>& buckets, std::vector<std::vector<int>>& adj) {
            for (const auto& bucket : buckets)
                for (int a : bucket)
                    for (int b : bucket)
                        if (a != b)
                            adj[a].push_back(b);
        };
        link(by_row, g.row);
        link(by_col, g.col);
        link(by_sym, g.sym);
        return g;
    }

}  // namespace

EdgeKind edge_kind(const LatinSquare& square, Cell a, Cell b)
{
    if (a == b)
        fail(ErrorCode::SameCell, "edge query on identical cells " + to_string(a));
    if (!square.contains(a) || !square.contains(b))
        fail(ErrorCode::InvalidArgument, "cell out of bounds");
    // Two distinct cells of a latin square agree in at most one coordinate.
    if (a.r == b.r)
        return EdgeKind::Row;
    if (a.c == b.c)
        return EdgeKind::Column;
    if (square.symbol(a) == square.symbol(b))
        return EdgeKind::Symbol;
    return EdgeKind::None;
}

bool are_adjacent(const LatinSquare& square, Cell a, Cell b)
{
    return edge_kind(square, a, b) != EdgeKind::None;
}

std::optional<int> LadderCertificate::position(Cell cell) const
{
    const auto it = std::find(rim.begin(), rim.end(), cell);
    if (it == rim.end())
        return std::nullopt;
    return static_cast<int>(it - rim.begin());
}

int LadderCertificate::rim_distance(Cell a, Cell b) const
{
    const auto pa = position(a);
    const auto pb = position(b);
    if (!pa || !pb)
        fail(ErrorCode::InvalidArgument, "cell is not on the rim");
    const int len = static_cast<int>(rim.size());
    const int d = std::abs(*pa - *pb);
    return std::min(d, len - d);
}

LadderCertificate recognize_mobius_ladder(const LatinSquare& square, std::span<const Cell> cells)
{
    check_cells(square, cells);
    const int v = static_cast<int>(cells.size());
    if (v < 6 || v % 2 != 0)
        fail(ErrorCode::NotLadder, "a Moebius ladder needs an even number (>= 6) of vertices, got " + std::to_string(v));
    const InducedGraph g = induce(square, cells);
    for (int i = 0; i < v; ++i)
        if (g.row[i].size() != 1 || g.col[i].size() != 1 || g.sym[i].size() != 1)
            fail(ErrorCode::NotLadder, "wrong degree at " + to_string(cells[i]) + ": row " + std::to_string(g.row[i].size())
                                           + ", column " + std::to_string(g.col[i].size()) + ", symbol "
                                           + std::to_string(g.sym[i].size()));

    const int start = static_cast<int>(std::min_element(cells.begin(), cells.end()) - cells.begin());
    std::vector<int> rim{start};
    std::vector<int> pos(v, -1);
    pos[start] = 0;
    int current = start;
    for (int step = 1; step < v; ++step) {
        const int next = (step % 2 == 1) ? g.row[current][0] : g.col[current][0];
        if (pos[next] >= 0)
            fail(ErrorCode::NotLadder, "rim closes prematurely after " + std::to_string(step) + " steps");
        pos[next] = step;
        rim.push_back(next);
        current = next;
    }
    if (g.col[current][0] != start)
        fail(ErrorCode::NotLadder, "alternating walk does not close into a cycle");

    LadderCertificate cert;
    const int half = v / 2;
    for (int idx : rim)
        cert.rim.push_back(cells[idx]);
    for (int p = 0; p < half; ++p) {
        const int a = rim[p];
        const int b = g.sym[a][0];
        if (pos[b] != p + half)
            fail(ErrorCode::NotLadder, "symbol edge at " + to_string(cells[a]) + " does not join opposite rim vertices");
        cert.rungs.push_back({cells[a], cells[b]});
    }
    return cert;
}

std::array<std::vector<Cell>, 2> two_color_after_deletion(const LadderCertificate& cert, Cell u, Cell v)
{
    const int len = static_cast<int>(cert.rim.size());
    const int half = cert.half();
    const auto pu = cert.position(u);
    const auto pv = cert.position(v);
    if (!pu || !pv)
        fail(ErrorCode::NotNearAntipodal, "deleted cells must lie on the rim");
    if (cert.rim_distance(u, v) != half - 1)
        fail(ErrorCode::NotNearAntipodal, "rim distance between " + to_string(u) + " and " + to_string(v) + " is "
                                              + std::to_string(cert.rim_distance(u, v)) + ", expected "
                                              + std::to_string(half - 1));

    std::vector<int> color(len, -1);
    std::array<std::vector<Cell>, 2> sides;
    for (int step = 1; step < len; ++step) {
        const int p = (*pu + step) % len;
        if (p == *pv)
            continue;
        bool used[3] = {false, false, false};
        for (int q : {(p + 1) % len, (p + len - 1) % len, (p + half) % len})
            if (color[q] >= 0)
                used[color[q]] = true;
        int c = 0;
        while (used[c])
            ++c;
        if (c >= 2)
            fail(ErrorCode::Consistency, "greedy rim coloring needed a third color");
        color[p] = c;
        sides[c].push_back(cert.rim[p]);
    }
    return sides;
}

std::array<std::vector<Cell>, 3> three_color_cubic(const LatinSquare& square, std::span<const Cell> cells)
{
    check_cells(square, cells);
    const int v = static_cast<int>(cells.size());
    const InducedGraph g = induce(square, cells);
    std::vector<std::vector<int>> adj(v);
    for (int i = 0; i < v; ++i) {
        adj[i] = g.row[i];
        adj[i].insert(adj[i].end(), g.col[i].begin(), g.col[i].end());
        adj[i].insert(adj[i].end(), g.sym[i].begin(), g.sym[i].end());
        if (adj[i].size() != 3)
            fail(ErrorCode::NotCubic, "vertex " + to_string(cells[i]) + " has degree " + std::to_string(adj[i].size()));
    }

    std::vector<int> component(v, -1);
    std::vector<std::vector<int>> components;
    for (int s = 0; s < v; ++s) {
        if (component[s] >= 0)
            continue;
        std::vector<int> members{s};
        component[s] = static_cast<int>(components.size());
        for (std::size_t k = 0; k < members.size(); ++k)
            for (int w : adj[members[k]])
                if (component[w] < 0) {
                    component[w] = component[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }

    std::vector<int> color(v, -1);
    for (const auto& members : components) {
        // A connected cubic graph on 4 vertices is K4.
        if (members.size() == 4) {
            std::vector<std::pair<int, int>> witness;
            for (int w : members)
                witness.push_back({cells[w].r, cells[w].c});
            throw Error(ErrorCode::K4Component, "induced subgraph has a K4 component", std::move(witness));
        }

        // DSATUR-style backtracking: always extend at the most constrained vertex.
        std::vector<int> stack;
        std::vector<int> tried;  // next color to try for stack[i]
        auto saturation = [&](int w) {
            int mask = 0;
            for (int x : adj[w])
                if (color[x] >= 0)
                    mask |= 1 << color[x];
            return mask;
        };
        auto pick = [&]() {
            int best = -1;
            int best_sat = -1;
            for (int w : members) {
                if (color[w] >= 0)
                    continue;
                const int sat = __builtin_popcount(saturation(w));
                if (sat > best_sat) {
                    best = w;
                    best_sat = sat;
                }
            }
            return best;
        };
        int w = pick();
        stack.push_back(w);
        tried.push_back(0);
        while (!stack.empty()) {
            const int x = stack.back();
            const int mask = saturation(x);
            int c = tried.back();
            while (c < 3 && (mask & (1 << c)))
                ++c;
            if (c >= 3) {
                color[x] = -1;
                stack.pop_back();
                tried.pop_back();
                if (!stack.empty())
                    color[stack.back()] = -1;
                continue;
            }
            color[x] = c;
            tried.back() = c + 1;
            const int next = pick();
            if (next < 0)
                break;
            stack.push_back(next);
            tried.push_back(0);
        }
        if (stack.empty())
            fail(ErrorCode::Consistency, "cubic component is not 3-colorable");
    }

    std::array<std::vector<Cell>, 3> classes;
    for (int i = 0; i < v; ++i)
        classes[color[i]].push_back(cells[i]);
    return classes;
}

}  // namespace latincolor
