#include "latincolor/composite.hpp"

#include "latincolor/abelian.hpp"
#include "latincolor/error.hpp"
#include "latincolor/lsq_graph.hpp"

#include <algorithm>

namespace latincolor {

namespace {

    void require_valid(const Coloring& coloring, const char* what)
    {
        const ColoringReport report = verify_coloring(coloring);
        if (!report.valid())
            fail(ErrorCode::Consistency, std::string(what) + " produced an invalid coloring:\n" + report.describe());
    }

    void drop_empty(std::vector<std::vector<Cell>>& classes)
    {
        classes.erase(std::remove_if(classes.begin(), classes.end(), [](const auto& c) { return c.empty(); }),
                      classes.end());
    }

    // Checks symbols[r][c] == row_order[r] * col_order[c] in `mul`.
    template <typename Mul>
    bool is_cayley_of(const LatinSquare& square, int order, Mul mul)
    {
        if (square.order() != order || !square.row_order() || !square.col_order())
            return false;
        const auto& rows = *square.row_order();
        const auto& cols = *square.col_order();
        for (int r = 0; r < order; ++r)
            for (int c = 0; c < order; ++c)
                if (square.symbol(r, c) != mul(rows[r], cols[c]))
                    return false;
        return true;
    }

    // Singleton classes: the latin square graph of Z_2 is K_4.
    Coloring singleton_coloring(const LatinSquare& square)
    {
        std::vector<std::vector<Cell>> classes;
        for (int r = 0; r < square.order(); ++r)
            for (int c = 0; c < square.order(); ++c)
                classes.push_back({{r, c}});
        return Coloring{square, std::move(classes)};
    }

    // Right translates {(x, phi(x) h)} of one complete mapping phi, over the
    // native order of g.
    std::vector<IndexMap> translate_complete_mapping(const FiniteGroup& g, const std::vector<Cell>& transversal)
    {
        std::vector<int> phi(g.order(), -1);
        for (const Cell& c : transversal)
            phi[c.r] = c.c;
        std::vector<IndexMap> maps;
        for (int h = 0; h < g.order(); ++h) {
            IndexMap map;
            map.phi.resize(g.order());
            for (int x = 0; x < g.order(); ++x)
                map.phi[x] = g.mul(phi[x], h);
            maps.push_back(std::move(map));
        }
        return maps;
    }

    // Nullopt unless every right diagonal of the native Cayley table is a transversal.
    std::optional<std::vector<IndexMap>> diagonal_maps(const FiniteGroup& g)
    {
        const int n = g.order();
        std::vector<IndexMap> maps;
        std::vector<char> seen(n);
        for (int d = 0; d < n; ++d) {
            IndexMap map;
            std::fill(seen.begin(), seen.end(), 0);
            for (int i = 0; i < n; ++i) {
                const int j = (i + d) % n;
                const int s = g.mul(i, j);
                if (seen[s])
                    return std::nullopt;
                seen[s] = 1;
                map.phi.push_back(j);
            }
            maps.push_back(std::move(map));
        }
        return maps;
    }

    std::vector<int> witness_quotient_map(const FiniteGroup& g, const BlockDecomposition& d, int witness, int t)
    {
        std::vector<int> map(t);
        int power = g.identity();
        for (int e = 0; e < t; ++e, power = g.mul(power, witness))
            map[e] = d.coset_of[power];
        return map;
    }

    Coloring cyclic_two_power_coloring(int t)
    {
        if (t == 2)
            return singleton_coloring(cayley_table(make_cyclic(2)));
        return abelian_n_plus_2_coloring(make_cyclic(t)).coloring;
    }

}  // namespace

std::vector<int> conjugation_permutation(const FiniteGroup& g, const Subgroup& h, int p)
{
    if (p < 0 || p >= g.order())
        fail(ErrorCode::InvalidArgument, "element index out of range");
    const auto inc = h.inclusion(g.order());
    std::vector<int> pi(h.order());
    for (int j = 0; j < h.order(); ++j) {
        const int conj = g.mul(g.mul(g.inverse(p), h.embedding[j]), p);
        if (inc[conj] < 0)
            fail(ErrorCode::NotNormal, "conjugate of a subgroup element leaves the subgroup");
        pi[j] = inc[conj];
    }
    return pi;
}

BlockDecomposition block_decomposition(const FiniteGroup& g, const Subgroup& h)
{
    if (!is_normal(g, h))
        fail(ErrorCode::NotNormal, "block decomposition needs a normal subgroup");
    std::vector<int> reps = coset_representatives(g, h);
    const int m = h.order();
    const int k = static_cast<int>(reps.size());

    std::vector<int> coset_of(g.order(), -1);
    std::vector<int> row_order;
    row_order.reserve(g.order());
    for (int i = 0; i < k; ++i)
        for (int x = 0; x < m; ++x) {
            const int element = g.mul(reps[i], h.embedding[x]);
            row_order.push_back(element);
            coset_of[element] = i;
        }
    LatinSquare square = cayley_table(g, row_order, row_order);

    std::vector<std::vector<Subsquare>> blocks(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            blocks[i].push_back(extract_block(square, {i * m, (i + 1) * m}, {j * m, (j + 1) * m}));

    std::vector<std::vector<int>> quotient_table(k, std::vector<int>(k));
    std::vector<std::string> quotient_labels;
    for (int i = 0; i < k; ++i) {
        quotient_labels.push_back(g.label(reps[i]) + "H");
        for (int j = 0; j < k; ++j)
            quotient_table[i][j] = coset_of[g.mul(reps[i], reps[j])];
    }
    FiniteGroup quotient(quotient_table, std::move(quotient_labels));
    LatinSquare quotient_square = cayley_table(quotient);

    std::vector<std::vector<int>> conjugation;
    for (int j = 0; j < k; ++j)
        conjugation.push_back(conjugation_permutation(g, h, reps[j]));

    return BlockDecomposition{g,
                              h,
                              std::move(reps),
                              std::move(coset_of),
                              std::move(row_order),
                              std::move(square),
                              m,
                              k,
                              std::move(blocks),
                              std::move(quotient),
                              std::move(quotient_square),
                              std::move(conjugation)};
}

std::vector<IndexMap> odd_transversal_decomposition(const FiniteGroup& h, std::uint64_t budget)
{
    if (h.order() % 2 == 0)
        fail(ErrorCode::WrongGroupClass, "transversal decomposition needs odd order");
    if (auto maps = diagonal_maps(h))
        return std::move(*maps);
    const TransversalSearch search = find_transversal(cayley_table(h), budget);
    if (search.status != SearchStatus::Found)
        fail(ErrorCode::SearchExhausted, "no transversal found for an odd-order group within the budget");
    return translate_complete_mapping(h, search.cells);
}

Coloring index_map_coloring(const FiniteGroup& h, std::span<const IndexMap> maps)
{
    std::vector<std::vector<Cell>> classes;
    for (const IndexMap& map : maps) {
        std::vector<Cell> cls;
        for (int i = 0; i < static_cast<int>(map.phi.size()); ++i)
            cls.push_back({i, map.phi[i]});
        classes.push_back(std::move(cls));
    }
    return Coloring{cayley_table(h), std::move(classes)};
}

Coloring product_coloring(const BlockDecomposition& d, const Coloring& h_coloring, const Coloring& q_coloring,
                          std::span<const int> quotient_map)
{
    const FiniteGroup& hg = d.subgroup.group;
    if (!is_cayley_of(h_coloring.square, d.m, [&](int a, int b) { return hg.mul(a, b); }))
        fail(ErrorCode::InvalidInputColoring, "subgroup coloring is not over a Cayley table of the subgroup");
    if (!verify_coloring(h_coloring).valid())
        fail(ErrorCode::InvalidInputColoring, "subgroup coloring is not a valid coloring");

    std::vector<int> qmap(quotient_map.begin(), quotient_map.end());
    if (qmap.empty()) {
        qmap.resize(d.k);
        for (int i = 0; i < d.k; ++i)
            qmap[i] = i;
    }
    if (static_cast<int>(qmap.size()) != d.k || q_coloring.square.order() != d.k)
        fail(ErrorCode::InvalidInputColoring, "quotient coloring has the wrong order");
    {
        std::vector<int> sorted = qmap;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < d.k; ++i)
            if (sorted[i] != i)
                fail(ErrorCode::InvalidInputColoring, "quotient map is not a bijection onto the cosets");
    }
    if (!q_coloring.square.row_order() || !q_coloring.square.col_order())
        fail(ErrorCode::InvalidInputColoring, "quotient coloring is not over a Cayley table");
    const auto& q_rows = *q_coloring.square.row_order();
    const auto& q_cols = *q_coloring.square.col_order();
    for (int r = 0; r < d.k; ++r)
        for (int c = 0; c < d.k; ++c)
            if (qmap[q_coloring.square.symbol(r, c)] != d.quotient.mul(qmap[q_rows[r]], qmap[q_cols[c]]))
                fail(ErrorCode::InvalidInputColoring, "quotient map is not compatible with the quotient table");
    if (!verify_coloring(q_coloring).valid())
        fail(ErrorCode::InvalidInputColoring, "quotient coloring is not a valid coloring");

    // inverse conjugation per column block
    std::vector<std::vector<int>> inv_conj(d.k, std::vector<int>(d.m));
    for (int j = 0; j < d.k; ++j)
        for (int x = 0; x < d.m; ++x)
            inv_conj[j][d.conjugation[j][x]] = x;

    const auto& h_rows = *h_coloring.square.row_order();
    const auto& h_cols = *h_coloring.square.col_order();
    const std::size_t hc = h_coloring.classes.size();
    std::vector<std::vector<Cell>> classes(hc * q_coloring.classes.size());
    for (std::size_t qi = 0; qi < q_coloring.classes.size(); ++qi)
        for (const Cell& qc : q_coloring.classes[qi]) {
            const int i = qmap[q_rows[qc.r]];
            const int j = qmap[q_cols[qc.c]];
            for (std::size_t hi = 0; hi < hc; ++hi)
                for (const Cell& cell : h_coloring.classes[hi]) {
                    const int a = h_rows[cell.r];
                    const int b = h_cols[cell.c];
                    classes[qi * hc + hi].push_back({i * d.m + inv_conj[j][a], j * d.m + b});
                }
        }
    drop_empty(classes);
    Coloring out{d.square, std::move(classes)};
    require_valid(out, "product coloring");
    return out;
}

Coloring power_bound_coloring(const FiniteGroup& g)
{
    const Sylow2Profile profile = sylow2_profile(g);
    if (!profile.cyclic_nontrivial())
        fail(ErrorCode::WrongGroupClass, "power bound needs a cyclic nontrivial Sylow 2-subgroup");
    const Subgroup h = odd_part_subgroup(g);
    const BlockDecomposition d = block_decomposition(g, h);
    const Coloring h_coloring = index_map_coloring(h.group, odd_transversal_decomposition(h.group));
    const Coloring q_coloring = cyclic_two_power_coloring(profile.t);
    const auto qmap = witness_quotient_map(g, d, *profile.witness, profile.t);
    return product_coloring(d, h_coloring, q_coloring, qmap);
}

ThreeHalvesColoring three_halves_coloring(const FiniteGroup& g)
{
    const int n = g.order();
    const Sylow2Profile profile = sylow2_profile(g);
    if (n < 3)
        fail(ErrorCode::WrongGroupClass, "three-halves construction needs n >= 3");
    if (profile.t != 2)
        fail(ErrorCode::WrongGroupClass, "three-halves construction needs a Sylow 2-subgroup of order 2");
    const Subgroup h = odd_part_subgroup(g);
    const int m = h.order();
    const int p = *profile.witness;

    std::vector<int> order(h.embedding);
    for (int j = 0; j < m; ++j)
        order.push_back(g.mul(p, h.embedding[j]));
    LatinSquare square = cayley_table(g, order, order);

    const std::vector<IndexMap> phi = odd_transversal_decomposition(h.group);
    const std::vector<int> pi = conjugation_permutation(g, h, p);

    ThreeHalvesColoring out{Coloring{square, {}}, {}};
    for (int i = 0; i < m; ++i) {
        const auto& phi_i = phi[i].phi;
        const auto& phi_next = phi[(i + 1) % m].phi;
        std::vector<Cell> x;
        for (int j = 0; j < m; ++j) {
            const int psi = m + phi_i[pi[j]];
            x.push_back({j, phi_i[j]});        // T_i
            x.push_back({m + j, phi_next[j]});  // T'_{i+1}
            x.push_back({j, psi});              // Q_i
            x.push_back({m + j, psi});          // Q'_i
        }
        std::array<std::vector<Cell>, 3> parts;
        try {
            parts = three_color_cubic(square, x);
        } catch (const Error& e) {
            fail(ErrorCode::Consistency, "X_" + std::to_string(i) + " could not be 3-colored: " + e.what());
        }
        for (auto& part : parts)
            out.coloring.classes.push_back(std::move(part));
        out.x_sets.push_back(std::move(x));
    }
    drop_empty(out.coloring.classes);
    require_valid(out.coloring, "three-halves construction");
    return out;
}

MethodColoring product_method_coloring(const GroupSpec& spec, std::uint64_t budget)
{
    const FiniteGroup g = spec.build();
    if (spec.atoms.size() >= 2) {
        const FiniteGroup a = spec.atoms.front().build();
        GroupSpec rest_spec{std::vector<GroupAtom>(spec.atoms.begin() + 1, spec.atoms.end())};
        const FiniteGroup b = rest_spec.build();
        std::vector<int> embedding;
        for (int x = 0; x < a.order(); ++x)
            embedding.push_back(x * b.order());
        const Subgroup h = make_subgroup(g, embedding);
        const BlockDecomposition d = block_decomposition(g, h);
        // element (0, y) of A x B has index y
        std::vector<int> qmap(b.order());
        for (int y = 0; y < b.order(); ++y)
            qmap[y] = d.coset_of[y];
        // h.group has the same table as a; a keeps its cyclic factor metadata
        const MethodColoring ha = best_coloring(a, budget);
        const MethodColoring qb = best_coloring(b, budget);
        return {product_coloring(d, ha.coloring, qb.coloring, qmap), "product"};
    }
    const Sylow2Profile profile = sylow2_profile(g);
    if (!profile.cyclic_nontrivial())
        fail(ErrorCode::WrongGroupClass, "product method needs a direct product or a cyclic nontrivial Sylow 2-subgroup");
    const Subgroup h = odd_part_subgroup(g);
    const BlockDecomposition d = block_decomposition(g, h);
    const MethodColoring hc = best_coloring(h.group, budget);
    const MethodColoring qc = best_coloring(make_cyclic(profile.t), budget);
    const auto qmap = witness_quotient_map(g, d, *profile.witness, profile.t);
    return {product_coloring(d, hc.coloring, qc.coloring, qmap), "product"};
}

MethodColoring best_coloring(const FiniteGroup& g, std::uint64_t budget)
{
    const Sylow2Profile profile = sylow2_profile(g);
    if (!profile.cyclic_nontrivial()) {
        if (auto maps = diagonal_maps(g)) {
            Coloring c = index_map_coloring(g, *maps);
            require_valid(c, "diagonal partition");
            return {std::move(c), "diagonals"};
        }
        const TransversalSearch search = find_transversal(cayley_table(g), budget);
        if (search.status == SearchStatus::Found) {
            Coloring c = index_map_coloring(g, translate_complete_mapping(g, search.cells));
            require_valid(c, "transversal partition");
            return {std::move(c), "search-partition"};
        }
        if (search.status == SearchStatus::NotFound)
            fail(ErrorCode::Consistency, "no transversal although the Sylow 2-subgroup is trivial or non-cyclic");
        fail(ErrorCode::SearchExhausted, "transversal search ran out of budget and no construction applies");
    }

    std::vector<MethodColoring> candidates;
    if (g.is_abelian() && !g.cyclic_factors().empty() && g.order() >= 4)
        candidates.push_back({abelian_n_plus_2_coloring(g).coloring, "abelian-n+2"});
    if (profile.t == 2 && g.order() >= 3)
        candidates.push_back({three_halves_coloring(g).coloring, "three-halves"});
    candidates.push_back({power_bound_coloring(g), "power-bound"});
    // first minimum wins, so ties follow the order above
    auto best = std::min_element(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return a.coloring.class_count() < b.coloring.class_count();
    });
    return std::move(*best);
}

}  // namespace latincolor
