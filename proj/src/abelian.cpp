#include "latincolor/abelian.hpp"

#include "latincolor/error.hpp"

#include <numeric>

namespace latincolor {

namespace {

    int mod(long long a, int n)
    {
        const long long r = a % n;
        return static_cast<int>(r < 0 ? r + n : r);
    }

    // Smallest x in [a*b] with x = u (mod a) and x = v (mod b), gcd(a, b) = 1.
    int crt(int u, int a, int v, int b)
    {
        for (int x = u; x < a * b; x += a)
            if (x % b == v)
                return x;
        fail(ErrorCode::Consistency, "CRT has no solution");
    }

}  // namespace

std::vector<Cell> DeletionSets::x_set() const
{
    std::vector<Cell> out(x);
    out.insert(out.end(), x_prime.begin(), x_prime.end());
    return out;
}

std::vector<Cell> DeletionSets::y_set() const
{
    std::vector<Cell> out(y);
    out.insert(out.end(), y_prime.begin(), y_prime.end());
    return out;
}

AbelianPlan plan(const FiniteGroup& g)
{
    const auto& factors = g.cyclic_factors();
    if (factors.empty() || !g.is_abelian())
        fail(ErrorCode::WrongGroupClass, "construction needs an Abelian group given as a product of cyclic groups");
    const Sylow2Profile profile = sylow2_profile(g);
    if (!profile.cyclic_nontrivial())
        fail(ErrorCode::WrongGroupClass, "construction needs a cyclic nontrivial Sylow 2-subgroup");
    if (g.order() < 4)
        fail(ErrorCode::WrongGroupClass, "construction needs n >= 4");

    AbelianPlan p;
    p.n = g.order();
    p.t = profile.t;
    p.l = profile.l;
    p.m = p.n / p.t;
    p.q = p.n / 2;
    p.k = (p.n + 3) / 4;
    if (p.q % 3 == 0) {
        p.q0 = p.q;
        p.q1 = p.q + 1;
    } else {
        p.q0 = p.q - 1;
        p.q1 = p.q;
    }

    // Split each cyclic factor Z_f into Z_{2^a} x Z_o; exactly one factor has a > 0.
    struct Split {
        int two;
        int odd;
    };
    std::vector<Split> splits;
    int two_factor = -1;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        int two = 1;
        int odd = factors[j];
        while (odd % 2 == 0) {
            odd /= 2;
            two *= 2;
        }
        if (two > 1) {
            if (two_factor >= 0)
                fail(ErrorCode::Consistency, "two even cyclic factors with a cyclic Sylow 2-subgroup");
            two_factor = static_cast<int>(j);
        }
        splits.push_back({two, odd});
        if (odd > 1)
            p.odd_factors.push_back(odd);
    }

    p.interleaved = interleaved_order(p.t, p.odd_factors);
    const OrderedFactors odd_lex = lexicographic_order(p.odd_factors);
    p.ordering.reserve(p.n);
    for (const InterleavedElement& e : p.interleaved) {
        const auto& h = odd_lex.elements[e.odd_index];
        int index = 0;
        std::size_t next_odd = 0;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            const int u = static_cast<int>(j) == two_factor ? e.two_part : 0;
            const int v = splits[j].odd > 1 ? h[next_odd++] : 0;
            index = index * factors[j] + crt(u, splits[j].two, v, splits[j].odd);
        }
        p.ordering.push_back(index);
    }
    return p;
}

LatinSquare plan_square(const FiniteGroup& g, const AbelianPlan& p)
{
    return cayley_table(g, p.ordering, p.ordering);
}

std::vector<std::vector<Cell>> build_diagonal_pairs(const LatinSquare& square, const AbelianPlan& p)
{
    if (square.order() != p.n)
        fail(ErrorCode::InvalidArgument, "square order does not match the plan");
    std::vector<std::vector<Cell>> pairs;
    pairs.reserve(p.q);
    for (int i = 0; i < p.q; ++i) {
        auto d = right_diagonal(square, 2 * i);
        const auto e = right_diagonal(square, 2 * i + 1);
        d.insert(d.end(), e.begin(), e.end());
        pairs.push_back(std::move(d));
    }
    return pairs;
}

DeletionSets build_deletion_sets(const AbelianPlan& p)
{
    const int n = p.n;
    DeletionSets sets;
    for (int i = 0; i < p.k; ++i) {
        sets.x.push_back({mod(i, n), mod(3LL * i, n)});
        sets.x_prime.push_back({mod(p.q0 + i, n), mod(p.q1 + 3LL * i, n)});
    }
    for (int j = 0; j < p.q - p.k; ++j) {
        sets.y.push_back({mod(j, n), mod(3LL * j + 2LL * p.k, n)});
        sets.y_prime.push_back({mod(p.q0 + j, n), mod(p.q1 + 3LL * j + 2LL * p.k, n)});
    }
    return sets;
}

AbelianColoring abelian_n_plus_2_coloring(const FiniteGroup& g)
{
    AbelianPlan p = plan(g);
    LatinSquare square = plan_square(g, p);
    const auto diagonals = build_diagonal_pairs(square, p);
    DeletionSets sets = build_deletion_sets(p);

    const auto x_cells = sets.x_set();
    const auto y_cells = sets.y_set();
    if (!is_partial_transversal(square, x_cells) || !is_partial_transversal(square, y_cells))
        fail(ErrorCode::Consistency, "deletion set is not a partial transversal");

    std::vector<std::vector<Cell>> classes(2 * p.q + 2);
    std::vector<LadderCertificate> ladders;
    ladders.reserve(p.q);
    for (int i = 0; i < p.q; ++i) {
        LadderCertificate cert;
        try {
            cert = recognize_mobius_ladder(square, diagonals[i]);
        } catch (const Error& e) {
            fail(ErrorCode::Consistency, "diagonal pair " + std::to_string(i) + " is not a Moebius ladder: " + e.what());
        }
        const Cell u = i < p.k ? sets.x[i] : sets.y[i - p.k];
        const Cell v = i < p.k ? sets.x_prime[i] : sets.y_prime[i - p.k];
        std::array<std::vector<Cell>, 2> sides;
        try {
            sides = two_color_after_deletion(cert, u, v);
        } catch (const Error& e) {
            fail(ErrorCode::Consistency, "deleted pair of ladder " + std::to_string(i) + ": " + e.what());
        }
        classes[2 * i] = std::move(sides[0]);
        classes[2 * i + 1] = std::move(sides[1]);
        ladders.push_back(std::move(cert));
    }
    classes[2 * p.q] = x_cells;
    classes[2 * p.q + 1] = y_cells;

    Coloring coloring{std::move(square), std::move(classes)};
    const ColoringReport report = verify_coloring(coloring);
    if (!report.valid())
        fail(ErrorCode::Consistency, "assembled coloring failed verification:\n" + report.describe());
    return AbelianColoring{std::move(coloring), std::move(p), std::move(sets), std::move(ladders)};
}

bool phi_injective(std::span<const int> odd_factors, int s, int c, int d)
{
    const OrderedFactors lex = lexicographic_order(odd_factors);
    const int n = static_cast<int>(lex.elements.size());
    std::vector<char> hit(n, 0);
    std::vector<int> sum(odd_factors.size());
    for (int i = 0; i < n; ++i) {
        const auto& a = lex.elements[mod(static_cast<long long>(i) + c, n)];
        const auto& b = lex.elements[mod(static_cast<long long>(s) * i + d, n)];
        for (std::size_t j = 0; j < sum.size(); ++j)
            sum[j] = (a[j] + b[j]) % odd_factors[j];
        const int image = lex.index_of(sum);
        if (hit[image])
            return false;
        hit[image] = 1;
    }
    return true;
}

PhiCheck check_phi_injective(std::span<const int> odd_factors, int s)
{
    long long n = 1;
    for (int f : odd_factors)
        n *= f;
    if (n % 2 == 0)
        fail(ErrorCode::InvalidArgument, "group order must be odd");
    PhiCheck result;
    result.bad_s = std::gcd(static_cast<long long>(s) + 1, n) != 1;
    for (int c = 0; c < n && result.injective_for_all; ++c)
        for (int d = 0; d < n; ++d)
            if (!phi_injective(odd_factors, s, c, d)) {
                result.injective_for_all = false;
                result.failing_c = c;
                result.failing_d = d;
                break;
            }
    return result;
}

}  // namespace latincolor
