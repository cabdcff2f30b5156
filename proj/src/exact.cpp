#include "latincolor/exact.hpp"

#include "latincolor/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace latincolor {

namespace {

    struct BudgetExceeded {};

    class PartialTransversalSearch {
    public:
        PartialTransversalSearch(const LatinSquare& square, int size, std::uint64_t budget)
            : sq_(square), n_(square.order()), target_(size), budget_(budget), col_used_(n_, 0), sym_used_(n_, 0),
              row_done_(n_, 0), choice_(n_, -1), row_of_(static_cast<std::size_t>(n_) * n_)
        {
            for (int r = 0; r < n_; ++r)
                for (int c = 0; c < n_; ++c)
                    row_of_[static_cast<std::size_t>(c) * n_ + sq_.symbol(r, c)] = r;
        }

        TransversalSearch run()
        {
            TransversalSearch out;
            if (target_ < 0 || target_ > n_)
                fail(ErrorCode::InvalidArgument, "partial transversal size out of range");
            try {
                if (dfs(0, n_ - target_)) {
                    out.status = SearchStatus::Found;
                    for (int r = 0; r < n_; ++r)
                        if (choice_[r] >= 0)
                            out.cells.push_back({r, choice_[r]});
                } else {
                    out.status = SearchStatus::NotFound;
                }
            } catch (const BudgetExceeded&) {
                out.status = SearchStatus::BudgetExhausted;
            }
            out.nodes = nodes_;
            return out;
        }

    private:
        int options(int r) const
        {
            int count = 0;
            for (int c = 0; c < n_; ++c)
                if (!col_used_[c] && !sym_used_[sq_.symbol(r, c)])
                    ++count;
            return count;
        }

        bool dfs(int placed, int skips_left)
        {
            if (++nodes_ > budget_)
                throw BudgetExceeded{};
            if (placed == target_)
                return true;
            // most constrained open row; a skip counts as one extra option
            int best = -1;
            int best_options = n_ + 2;
            for (int r = 0; r < n_; ++r) {
                if (row_done_[r])
                    continue;
                const int o = options(r) + (skips_left > 0 ? 1 : 0);
                if (o < best_options) {
                    best_options = o;
                    best = r;
                    if (o == 0)
                        return false;
                }
            }
            if (best < 0)
                return false;
            if (skips_left == 0) {
                // a full transversal must also cover every column and symbol;
                // branch on whichever of the three is tightest
                const CoverChoice alt = tightest_column_or_symbol();
                if (alt.options == 0)
                    return false;
                if (alt.options < best_options)
                    return branch_on(alt, placed);
            }
            row_done_[best] = 1;
            for (int c = 0; c < n_; ++c) {
                const int s = sq_.symbol(best, c);
                if (col_used_[c] || sym_used_[s])
                    continue;
                col_used_[c] = sym_used_[s] = 1;
                choice_[best] = c;
                if (dfs(placed + 1, skips_left))
                    return true;
                choice_[best] = -1;
                col_used_[c] = sym_used_[s] = 0;
            }
            if (skips_left > 0 && dfs(placed, skips_left - 1))
                return true;
            row_done_[best] = 0;
            return false;
        }

        struct CoverChoice {
            bool is_symbol = false;
            int item = -1;
            int options = 0;
        };

        // Open row holding symbol s in column c, or -1.
        int cell_row(int c, int s) const { return row_of_[static_cast<std::size_t>(c) * n_ + s]; }

        CoverChoice tightest_column_or_symbol() const
        {
            CoverChoice best;
            best.options = n_ + 2;
            for (int c = 0; c < n_; ++c) {
                if (col_used_[c])
                    continue;
                int o = 0;
                for (int r = 0; r < n_; ++r)
                    o += !row_done_[r] && !sym_used_[sq_.symbol(r, c)];
                if (o < best.options)
                    best = {false, c, o};
            }
            for (int sym = 0; sym < n_; ++sym) {
                if (sym_used_[sym])
                    continue;
                int o = 0;
                for (int c = 0; c < n_; ++c) {
                    if (col_used_[c])
                        continue;
                    const int r = cell_row(c, sym);
                    o += !row_done_[r];
                }
                if (o < best.options)
                    best = {true, sym, o};
            }
            return best;
        }

        bool try_cell(int r, int c, int placed)
        {
            const int s = sq_.symbol(r, c);
            row_done_[r] = 1;
            col_used_[c] = sym_used_[s] = 1;
            choice_[r] = c;
            if (dfs(placed + 1, 0))
                return true;
            choice_[r] = -1;
            col_used_[c] = sym_used_[s] = 0;
            row_done_[r] = 0;
            return false;
        }

        bool branch_on(const CoverChoice& choice, int placed)
        {
            if (!choice.is_symbol) {
                const int c = choice.item;
                for (int r = 0; r < n_; ++r)
                    if (!row_done_[r] && !sym_used_[sq_.symbol(r, c)] && try_cell(r, c, placed))
                        return true;
                return false;
            }
            const int sym = choice.item;
            for (int c = 0; c < n_; ++c) {
                if (col_used_[c])
                    continue;
                const int r = cell_row(c, sym);
                if (!row_done_[r] && try_cell(r, c, placed))
                    return true;
            }
            return false;
        }

        const LatinSquare& sq_;
        int n_;
        int target_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        std::vector<char> col_used_, sym_used_, row_done_;
        std::vector<int> choice_;
        std::vector<int> row_of_;
    };

    // Orthogonal-mate style search: variable (r, j) is the column of class j
    // in row r; class j is seeded with cell (0, j).
    class PartitionSolver {
    public:
        PartitionSolver(const LatinSquare& square, std::uint64_t budget)
            : sq_(square), n_(square.order()), budget_(budget),
              assign_(static_cast<std::size_t>(n_) * n_, -1),
              cell_taken_(static_cast<std::size_t>(n_) * n_, 0),
              class_col_(static_cast<std::size_t>(n_) * n_, 0),
              class_sym_(static_cast<std::size_t>(n_) * n_, 0)
        {
        }

        PartitionSearch run()
        {
            PartitionSearch out;
            for (int j = 0; j < n_; ++j)
                place(0, j, j);
            try {
                out.status = dfs(n_ * (n_ - 1)) ? SearchStatus::Found : SearchStatus::NotFound;
            } catch (const BudgetExceeded&) {
                out.status = SearchStatus::BudgetExhausted;
            }
            out.nodes = nodes_;
            if (out.status == SearchStatus::Found) {
                std::vector<std::vector<Cell>> classes(n_);
                for (int r = 0; r < n_; ++r)
                    for (int j = 0; j < n_; ++j)
                        classes[j].push_back({r, assign_[idx(r, j)]});
                out.coloring = Coloring{sq_, std::move(classes)};
            }
            return out;
        }

    private:
        std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

        bool allowed(int r, int j, int c) const
        {
            return !cell_taken_[idx(r, c)] && !class_col_[idx(j, c)] && !class_sym_[idx(j, sq_.symbol(r, c))];
        }

        void place(int r, int j, int c)
        {
            assign_[idx(r, j)] = c;
            cell_taken_[idx(r, c)] = 1;
            class_col_[idx(j, c)] = 1;
            class_sym_[idx(j, sq_.symbol(r, c))] = 1;
        }

        void unplace(int r, int j, int c)
        {
            assign_[idx(r, j)] = -1;
            cell_taken_[idx(r, c)] = 0;
            class_col_[idx(j, c)] = 0;
            class_sym_[idx(j, sq_.symbol(r, c))] = 0;
        }

        bool dfs(int remaining)
        {
            if (++nodes_ > budget_)
                throw BudgetExceeded{};
            if (remaining == 0)
                return true;
            int best_r = -1;
            int best_j = -1;
            int best_count = n_ + 1;
            for (int r = 1; r < n_ && best_count > 0; ++r)
                for (int j = 0; j < n_; ++j) {
                    if (assign_[idx(r, j)] >= 0)
                        continue;
                    int count = 0;
                    for (int c = 0; c < n_; ++c)
                        if (allowed(r, j, c))
                            ++count;
                    if (count < best_count) {
                        best_count = count;
                        best_r = r;
                        best_j = j;
                        if (count <= 1)
                            break;
                    }
                }
            if (best_count == 0)
                return false;
            for (int c = 0; c < n_; ++c) {
                if (!allowed(best_r, best_j, c))
                    continue;
                place(best_r, best_j, c);
                if (dfs(remaining - 1))
                    return true;
                unplace(best_r, best_j, c);
            }
            return false;
        }

        const LatinSquare& sq_;
        int n_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        std::vector<int> assign_;
        std::vector<char> cell_taken_, class_col_, class_sym_;
    };

    // Decides k-colorability of the latin square graph.
    class ColoringSolver {
    public:
        ColoringSolver(const LatinSquare& square, std::uint64_t& nodes, std::uint64_t budget)
            : sq_(square), n_(square.order()), v_(n_ * n_), nodes_(nodes), budget_(budget)
        {
            adj_.resize(v_);
            for (int a = 0; a < v_; ++a)
                for (int b = 0; b < v_; ++b)
                    if (a != b) {
                        const Cell ca = cell(a);
                        const Cell cb = cell(b);
                        if (ca.r == cb.r || ca.c == cb.c || sq_.symbol(ca) == sq_.symbol(cb))
                            adj_[a].push_back(b);
                    }
        }

        // Returns the coloring (class index per vertex) or nothing when
        // infeasible. Throws BudgetExceeded.
        std::optional<std::vector<int>> solve(int k, int cap)
        {
            k_ = k;
            cap_ = cap;
            color_.assign(v_, -1);
            forbid_.assign(static_cast<std::size_t>(v_) * k_, 0);
            size_.assign(k_, 0);
            uncolored_ = v_;
            used_ = 0;
            if (static_cast<long long>(k_) * cap_ < v_)
                return std::nullopt;
            for (int j = 0; j < n_; ++j)
                if (!assign(j, j))
                    return std::nullopt;
            used_ = n_;
            if (!dfs())
                return std::nullopt;
            return color_;
        }

        static std::vector<std::vector<Cell>> classes_of(const std::vector<int>& color, int n, int k)
        {
            std::vector<std::vector<Cell>> classes(k);
            for (int v = 0; v < static_cast<int>(color.size()); ++v)
                classes[color[v]].push_back({v / n, v % n});
            return classes;
        }

    private:
        Cell cell(int v) const { return {v / n_, v % n_}; }
        std::size_t fi(int v, int c) const { return static_cast<std::size_t>(v) * k_ + c; }

        // False when some neighbor is left without any color.
        bool assign(int v, int c)
        {
            color_[v] = c;
            ++size_[c];
            --uncolored_;
            bool ok = true;
            for (int w : adj_[v])
                if (color_[w] < 0 && forbid_[fi(w, c)]++ == 0 && ok) {
                    bool any = false;
                    for (int d = 0; d < k_ && !any; ++d)
                        any = forbid_[fi(w, d)] == 0;
                    ok = any;
                }
            return ok;
        }

        void unassign(int v)
        {
            const int c = color_[v];
            for (int w : adj_[v])
                if (color_[w] < 0)
                    --forbid_[fi(w, c)];
            color_[v] = -1;
            --size_[c];
            ++uncolored_;
        }

        bool usable(int v, int c) const { return forbid_[fi(v, c)] == 0 && size_[c] < cap_ && (c <= used_); }

        bool dfs()
        {
            if (++nodes_ > budget_)
                throw BudgetExceeded{};
            if (uncolored_ == 0)
                return true;
            long long room = 0;
            for (int c = 0; c < k_; ++c)
                room += cap_ - size_[c];
            if (room < uncolored_)
                return false;

            int best = -1;
            int best_avail = k_ + 1;
            int best_deg = -1;
            for (int v = 0; v < v_; ++v) {
                if (color_[v] >= 0)
                    continue;
                int avail = 0;
                for (int c = 0; c < k_; ++c)
                    if (forbid_[fi(v, c)] == 0 && size_[c] < cap_)
                        ++avail;
                if (avail == 0)
                    return false;
                if (avail > best_avail)
                    continue;
                int deg = 0;
                for (int w : adj_[v])
                    deg += color_[w] < 0;
                if (avail < best_avail || deg > best_deg) {
                    best = v;
                    best_avail = avail;
                    best_deg = deg;
                }
            }

            for (int c = 0; c < k_ && c <= used_; ++c) {
                if (!usable(best, c))
                    continue;
                const int saved_used = used_;
                if (c == used_)
                    ++used_;
                const bool ok = assign(best, c);
                if (ok && dfs())
                    return true;
                unassign(best);
                used_ = saved_used;
            }
            return false;
        }

        const LatinSquare& sq_;
        int n_;
        int v_;
        std::uint64_t& nodes_;
        std::uint64_t budget_;
        std::vector<std::vector<int>> adj_;
        int k_ = 0;
        int cap_ = 0;
        std::vector<int> color_;
        std::vector<unsigned short> forbid_;
        std::vector<int> size_;
        int uncolored_ = 0;
        int used_ = 0;  // colors 0..used_-1 are open; used_ is the next fresh color
    };

    // Plain greedy in saturation order, no backtracking.
    std::vector<int> greedy_dsatur(const LatinSquare& square)
    {
        const int n = square.order();
        const int v = n * n;
        std::vector<int> color(v, -1);
        for (int step = 0; step < v; ++step) {
            int best = -1;
            int best_sat = -1;
            std::vector<char> seen;
            for (int a = 0; a < v; ++a) {
                if (color[a] >= 0)
                    continue;
                seen.assign(static_cast<std::size_t>(3 * n), 0);
                int sat = 0;
                for (int b = 0; b < v; ++b) {
                    if (b == a || color[b] < 0)
                        continue;
                    const Cell ca{a / n, a % n};
                    const Cell cb{b / n, b % n};
                    if ((ca.r == cb.r || ca.c == cb.c || square.symbol(ca) == square.symbol(cb)) && !seen[color[b]]) {
                        seen[color[b]] = 1;
                        ++sat;
                    }
                }
                if (sat > best_sat) {
                    best_sat = sat;
                    best = a;
                }
            }
            std::vector<char> used(static_cast<std::size_t>(3 * n + 1), 0);
            const Cell cb{best / n, best % n};
            for (int a = 0; a < v; ++a) {
                if (color[a] < 0)
                    continue;
                const Cell ca{a / n, a % n};
                if (ca.r == cb.r || ca.c == cb.c || square.symbol(ca) == square.symbol(cb))
                    used[color[a]] = 1;
            }
            int c = 0;
            while (used[c])
                ++c;
            color[best] = c;
        }
        return color;
    }

}  // namespace

std::optional<std::uint64_t> parse_budget(std::string_view text)
{
    const std::string raw(text);
    char* end = nullptr;
    const double value = std::strtod(raw.c_str(), &end);
    if (raw.empty() || end != raw.c_str() + raw.size() || !std::isfinite(value) || !(value >= 1.0) || value > 1.8e19)
        return std::nullopt;
    return static_cast<std::uint64_t>(value);
}

std::uint64_t budget_from_env(std::uint64_t fallback)
{
    const char* raw = std::getenv("LATIN_BUDGET");
    if (raw == nullptr)
        return fallback;
    return parse_budget(raw).value_or(fallback);
}

std::string_view to_string(SearchStatus status)
{
    switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not-found";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

std::string_view to_string(ChromaticResult::LowerBound kind)
{
    return kind == ChromaticResult::LowerBound::CliqueN ? "clique-n" : "exhausted-k";
}

TransversalSearch find_partial_transversal(const LatinSquare& square, int size, std::uint64_t budget)
{
    return PartialTransversalSearch(square, size, budget).run();
}

TransversalSearch find_transversal(const LatinSquare& square, std::uint64_t budget)
{
    return find_partial_transversal(square, square.order(), budget);
}

TransversalSearch find_near_transversal(const LatinSquare& square, std::uint64_t budget)
{
    return find_partial_transversal(square, square.order() - 1, budget);
}

MaxPartialTransversal max_partial_transversal(const LatinSquare& square, std::uint64_t budget)
{
    MaxPartialTransversal out;
    out.proven = true;
    for (int size = square.order(); size >= 1; --size) {
        const TransversalSearch s = find_partial_transversal(square, size, budget);
        out.nodes += s.nodes;
        if (s.status == SearchStatus::Found) {
            out.size = size;
            out.witness = s.cells;
            return out;
        }
        if (s.status == SearchStatus::BudgetExhausted)
            out.proven = false;
    }
    return out;
}

PartitionSearch partition_into_transversals(const LatinSquare& square, std::uint64_t budget)
{
    return PartitionSolver(square, budget).run();
}

namespace {

    ChromaticResult make_result(int k, int n, Coloring witness)
    {
        const bool clique = k == n;
        return ChromaticResult{k, std::move(witness),
                               clique ? ChromaticResult::LowerBound::CliqueN : ChromaticResult::LowerBound::ExhaustedK,
                               clique ? n : k - 1};
    }

}  // namespace

int chromatic_upper_limit(int n)
{
    return n >= 3 ? 3 * n - 3 : n * n;
}

ChromaticOutcome exact_chromatic(const LatinSquare& square, int max_k, std::uint64_t budget)
{
    const int n = square.order();
    const int limit = chromatic_upper_limit(n);
    if (max_k <= 0)
        max_k = limit;
    if (max_k > limit)
        fail(ErrorCode::InvalidArgument, "max_k exceeds " + std::to_string(limit));
    if (max_k < n)
        fail(ErrorCode::InvalidArgument, "max_k is below the clique bound n");

    ChromaticOutcome out;
    out.lower = n;

    const std::vector<int> greedy = greedy_dsatur(square);
    const int greedy_k = *std::max_element(greedy.begin(), greedy.end()) + 1;
    out.upper = greedy_k;
    out.best = Coloring{square, ColoringSolver::classes_of(greedy, n, greedy_k)};

    // Class sizes are bounded by the largest partial transversal; when the
    // search for it runs out of budget fall back to the trivial cap n.
    const MaxPartialTransversal mpt = max_partial_transversal(square, budget);
    const int cap = mpt.proven ? mpt.size : n;
    out.nodes = std::min(mpt.nodes, budget);

    ColoringSolver solver(square, out.nodes, budget);
    for (int k = n; k <= std::min(max_k, greedy_k - 1); ++k) {
        std::optional<std::vector<int>> found;
        try {
            found = solver.solve(k, cap);
        } catch (const BudgetExceeded&) {
            out.budget_exhausted = true;
            return out;
        }
        if (found) {
            Coloring witness{square, ColoringSolver::classes_of(*found, n, k)};
            out.upper = k;
            out.best = witness;
            out.result = make_result(k, n, std::move(witness));
            return out;
        }
        out.lower = k + 1;
    }
    if (greedy_k <= max_k)
        out.result = make_result(greedy_k, n, *out.best);
    return out;
}

}  // namespace latincolor
