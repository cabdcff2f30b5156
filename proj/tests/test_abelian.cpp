#include "support.hpp"

#include "latincolor/abelian.hpp"
#include "latincolor/error.hpp"
#include "latincolor/group_spec.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace latincolor;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Consistency;
}

std::set<Cell> as_set(const std::vector<Cell>& v) { return {v.begin(), v.end()}; }

// Abelian catalogue groups the construction applies to.
std::vector<std::string> construction_groups(int max_order)
{
    std::vector<std::string> out;
    for (const std::string& spec : builtin_group_specs(max_order)) {
        const FiniteGroup g = build_group(spec);
        if (g.order() >= 4 && !g.cyclic_factors().empty() && g.is_abelian() && oracle::brute_cyclic_sylow2(g))
            out.push_back(spec);
    }
    return out;
}

// Direct evaluation of i -> g_{i+c} + g_{s i + d} over the lexicographic
// ordering, written from the mixed-radix definition.
bool phi_injective_oracle(const std::vector<int>& moduli, int s, int c, int d)
{
    const int n = std::accumulate(moduli.begin(), moduli.end(), 1, std::multiplies<>());
    auto digits = [&](int x) {
        std::vector<int> out(moduli.size());
        for (int j = static_cast<int>(moduli.size()) - 1; j >= 0; --j) {
            out[j] = x % moduli[j];
            x /= moduli[j];
        }
        return out;
    };
    std::set<std::vector<int>> images;
    for (int i = 0; i < n; ++i) {
        auto a = digits(((i + c) % n + n) % n);
        const auto b = digits(((static_cast<long long>(s) * i + d) % n + n) % n);
        for (std::size_t j = 0; j < a.size(); ++j)
            a[j] = (a[j] + b[j]) % moduli[j];
        images.insert(a);
    }
    return static_cast<int>(images.size()) == n;
}

}  // namespace

TEST_CASE("plan parameters")
{
    const AbelianPlan z4 = plan(make_cyclic(4));
    CHECK(z4.t == 4);
    CHECK(z4.m == 1);
    CHECK(z4.q == 2);
    CHECK(z4.k == 1);
    CHECK(z4.q0 == 1);
    CHECK(z4.q1 == 2);
    CHECK(z4.ordering == std::vector<int>{0, 1, 2, 3});

    const AbelianPlan z6 = plan(make_cyclic(6));
    CHECK(z6.q == 3);
    CHECK(z6.k == 2);
    CHECK(z6.q0 == 3);
    CHECK(z6.q1 == 4);

    const AbelianPlan f4 = plan(build_group("Z2xZ3xZ3"));
    CHECK(f4.n == 18);
    CHECK(f4.t == 2);
    CHECK(f4.l == 1);
    CHECK(f4.m == 9);
    CHECK(f4.q == 9);
    CHECK(f4.k == 5);
    CHECK(f4.q0 == 9);
    CHECK(f4.q1 == 10);
    CHECK(f4.odd_factors == std::vector<int>{3, 3});

    const AbelianPlan z10 = plan(make_cyclic(10));
    CHECK(z10.q == 5);
    CHECK(z10.k == 3);
    CHECK(z10.q0 == 4);
    CHECK(z10.q1 == 5);
}

TEST_CASE("the ordering sends position i to (i mod t, h_(i mod m))")
{
    for (const char* spec : {"Z2xZ3xZ3", "Z12", "Z4xZ3", "Z8xZ5", "Z2xZ3xZ5", "Z6"}) {
        CAPTURE(std::string(spec));
        const FiniteGroup g = build_group(spec);
        const AbelianPlan p = plan(g);
        const auto lex = lexicographic_order(p.odd_factors);
        std::set<int> seen(p.ordering.begin(), p.ordering.end());
        CHECK(static_cast<int>(seen.size()) == p.n);
        // g_i g_j = g_{i+j} when the positions are read as elements of Z_t x H
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j) {
                const auto& hi = lex.elements[i % p.m];
                const auto& hj = lex.elements[j % p.m];
                std::vector<int> h(hi.size());
                for (std::size_t a = 0; a < h.size(); ++a)
                    h[a] = (hi[a] + hj[a]) % p.odd_factors[a];
                int target = -1;
                for (int x = 0; x < p.n && target < 0; ++x)
                    if (x % p.t == (i + j) % p.t && lex.elements[x % p.m] == h)
                        target = x;
                REQUIRE(target >= 0);
                CHECK(g.mul(p.ordering[i], p.ordering[j]) == p.ordering[target]);
            }
    }
}

TEST_CASE("deletion sets and the first ladder of Z2xZ3xZ3 match the golden cells")
{
    const AbelianColoring a = abelian_n_plus_2_coloring(build_group("Z2xZ3xZ3"));
    CHECK(as_set(a.deletions.x_set()) == as_set(oracle::read_cells("z2z3z3_x.txt")));
    CHECK(as_set(a.deletions.y_set()) == as_set(oracle::read_cells("z2z3z3_y.txt")));
    CHECK(a.deletions.x.size() == 5);
    CHECK(a.deletions.y.size() == 4);
    const auto d0 = oracle::read_cells("z2z3z3_d0.txt");
    REQUIRE(a.ladders.size() == 9);
    CHECK(as_set(a.ladders[0].rim) == as_set(d0));
    CHECK(as_set(build_diagonal_pairs(a.coloring.square, a.plan)[0]) == as_set(d0));

    CHECK(a.coloring.class_count() == 20);
    CHECK(oracle::is_proper_coloring(a.coloring));
    CHECK(a.coloring.classes[18] == a.deletions.x_set());
    CHECK(a.coloring.classes[19] == a.deletions.y_set());
}

TEST_CASE("the construction yields n + 2 classes on every applicable catalogue group up to order 48")
{
    const auto specs = construction_groups(48);
    CHECK(specs.size() > 20);
    for (const std::string& spec : specs) {
        CAPTURE(spec);
        const FiniteGroup g = build_group(spec);
        const AbelianColoring a = abelian_n_plus_2_coloring(g);
        const int n = g.order();
        CHECK(static_cast<int>(a.coloring.class_count()) == n + 2);
        CHECK(oracle::is_proper_coloring(a.coloring));
        REQUIRE(static_cast<int>(a.ladders.size()) == a.plan.q);

        for (int i = 0; i < a.plan.q; ++i) {
            const LadderCertificate& cert = a.ladders[i];
            const Cell u = i < a.plan.k ? a.deletions.x[i] : a.deletions.y[i - a.plan.k];
            const Cell v = i < a.plan.k ? a.deletions.x_prime[i] : a.deletions.y_prime[i - a.plan.k];
            CHECK(cert.rim_distance(u, v) == n - 1);
            // the even class holds the rim successor of the deleted cell
            const Cell succ = cert.rim[(*cert.position(u) + 1) % cert.rim.size()];
            const auto& even = a.coloring.classes[2 * i];
            CHECK(std::find(even.begin(), even.end(), succ) != even.end());
            // an induced cubic graph on 2n cells
            for (int deg : oracle::induced_degrees(a.coloring.square, cert.rim))
                CHECK(deg == 3);
        }
    }
}

TEST_CASE("Moebius ladder claim for every diagonal pair")
{
    for (const std::string& spec : construction_groups(48)) {
        CAPTURE(spec);
        const FiniteGroup g = build_group(spec);
        const AbelianPlan p = plan(g);
        const LatinSquare sq = plan_square(g, p);
        const auto pairs = build_diagonal_pairs(sq, p);
        CHECK(static_cast<int>(pairs.size()) == p.q);
        for (const auto& d : pairs)
            CHECK_NOTHROW(recognize_mobius_ladder(sq, d));
    }
}

TEST_CASE("groups outside the construction's class")
{
    for (const char* spec : {"Z2", "Z3", "Z9", "Z2xZ2", "Z2xZ2xZ3", "D3", "Dic3", "Z1"}) {
        CAPTURE(std::string(spec));
        const FiniteGroup g = build_group(spec);
        CHECK(code_of([&] { plan(g); }) == ErrorCode::WrongGroupClass);
        CHECK(code_of([&] { abelian_n_plus_2_coloring(g); }) == ErrorCode::WrongGroupClass);
    }
    // an Abelian table without factor metadata
    const FiniteGroup bare(make_cyclic(6).table(), make_cyclic(6).labels());
    CHECK(code_of([&] { plan(bare); }) == ErrorCode::WrongGroupClass);
}

TEST_CASE("phi is injective for every odd Abelian group up to order 45")
{
    int groups = 0;
    for (const std::string& spec : builtin_group_specs(45)) {
        const FiniteGroup g = build_group(spec);
        if (g.order() % 2 == 0 || g.cyclic_factors().empty() || g.order() == 1)
            continue;
        CAPTURE(spec);
        ++groups;
        for (int s : {1, 3}) {
            const PhiCheck r = check_phi_injective(g.cyclic_factors(), s);
            CHECK_FALSE(r.bad_s);
            CHECK(r.injective_for_all);
        }
    }
    CHECK(groups >= 20);
}

TEST_CASE("phi agrees with a direct evaluation, including failing parameters")
{
    const std::vector<std::vector<int>> moduli{{3}, {5}, {3, 3}, {15}, {3, 5}, {9}};
    for (const auto& m : moduli)
        for (int s : {1, 2, 3, 4})
            for (int c = 0; c < 5; ++c)
                for (int d = 0; d < 5; ++d)
                    CHECK(phi_injective(m, s, c, d) == phi_injective_oracle(m, s, c, d));

    // s = 2 on Z3: g_i + g_{2i} = 3i = 0 for all i
    const std::vector<int> z3{3};
    const PhiCheck bad = check_phi_injective(z3, 2);
    CHECK(bad.bad_s);
    CHECK_FALSE(bad.injective_for_all);
    CHECK(bad.failing_c == 0);
    CHECK(bad.failing_d == 0);
    const std::vector<int> even{4};
    CHECK(code_of([&] { check_phi_injective(even, 1); }) == ErrorCode::InvalidArgument);
}
