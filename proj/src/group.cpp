#include "latincolor/group.hpp"

#include "latincolor/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace latincolor {

namespace {

    constexpr int kAssociativityCheckLimit = 200;

    bool is_permutation_of_range(std::span<const int> values, int n)
    {
        std::vector<char> seen(n, 0);
        for (int v : values) {
            if (v < 0 || v >= n || seen[v])
                return false;
            seen[v] = 1;
        }
        return true;
    }

    std::string power_label(const char* symbol, int e)
    {
        if (e == 0)
            return "";
        if (e == 1)
            return symbol;
        return std::string(symbol) + "^" + std::to_string(e);
    }

    int mod(long long a, int n)
    {
        long long r = a % n;
        return static_cast<int>(r < 0 ? r + n : r);
    }

}  // namespace

FiniteGroup::FiniteGroup(const std::vector<std::vector<int>>& table, std::vector<std::string> labels,
                         std::vector<int> cyclic_factors)
    : order_(static_cast<int>(table.size())), labels_(std::move(labels)), cyclic_factors_(std::move(cyclic_factors))
{
    const int n = order_;
    if (n == 0)
        fail(ErrorCode::InvalidArgument, "group must have at least one element");
    if (static_cast<int>(labels_.size()) != n)
        fail(ErrorCode::InvalidArgument, "label count does not match group order");
    if (!cyclic_factors_.empty()) {
        long long prod = 1;
        for (int f : cyclic_factors_) {
            if (f < 1)
                fail(ErrorCode::InvalidArgument, "cyclic factor must be positive");
            prod *= f;
        }
        if (prod != n)
            fail(ErrorCode::InvalidArgument, "cyclic factors do not multiply to the group order");
    }

    table_.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            fail(ErrorCode::InvalidArgument, "multiplication table is not square");
        if (!is_permutation_of_range(row, n))
            fail(ErrorCode::NotPermutation, "multiplication table row is not a permutation");
        table_.insert(table_.end(), row.begin(), row.end());
    }
    std::vector<int> column(n);
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a)
            column[a] = mul(a, b);
        if (!is_permutation_of_range(column, n))
            fail(ErrorCode::NotPermutation, "multiplication table column is not a permutation");
    }

    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = mul(e, a) == a && mul(a, e) == a;
        if (ok)
            identity_ = e;
    }
    if (identity_ < 0)
        fail(ErrorCode::InvalidArgument, "multiplication table has no identity");

    if (n <= kAssociativityCheckLimit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const int ab = mul(a, b);
                for (int c = 0; c < n; ++c)
                    if (mul(ab, c) != mul(a, mul(b, c)))
                        fail(ErrorCode::InvalidArgument, "multiplication table is not associative");
            }
    }

    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == identity_) {
                inverse_[a] = b;
                break;
            }
}

int FiniteGroup::power(int a, long long e) const
{
    if (e < 0) {
        a = inverse(a);
        e = -e;
    }
    int result = identity_;
    int base = a;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bool FiniteGroup::is_abelian() const
{
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const
{
    std::vector<std::vector<int>> rows(order_);
    for (int a = 0; a < order_; ++a)
        rows[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a) * order_,
                       table_.begin() + static_cast<std::ptrdiff_t>(a + 1) * order_);
    return rows;
}

std::vector<int> Subgroup::inclusion(int parent_order) const
{
    std::vector<int> inc(parent_order, -1);
    for (int i = 0; i < static_cast<int>(embedding.size()); ++i)
        inc[embedding[i]] = i;
    return inc;
}

int OrderedFactors::index_of(std::span<const int> tuple) const
{
    if (tuple.size() != moduli.size())
        fail(ErrorCode::InvalidArgument, "tuple arity does not match the factor list");
    int index = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (tuple[i] < 0 || tuple[i] >= moduli[i])
            fail(ErrorCode::InvalidArgument, "tuple coordinate out of range");
        index = index * moduli[i] + tuple[i];
    }
    return index;
}

FiniteGroup make_cyclic(int n)
{
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "cyclic group order must be at least 1");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = std::to_string(a);
        for (int b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    }
    return FiniteGroup(table, std::move(labels), {n});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h)
{
    const int ng = g.order();
    const int nh = h.order();
    const int n = ng * nh;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        const int a1 = a / nh;
        const int a2 = a % nh;
        labels[a] = g.label(a1) + "×" + h.label(a2);
        for (int b = 0; b < n; ++b)
            table[a][b] = g.mul(a1, b / nh) * nh + h.mul(a2, b % nh);
    }
    std::vector<int> factors;
    if (!g.cyclic_factors().empty() && !h.cyclic_factors().empty()) {
        factors = g.cyclic_factors();
        factors.insert(factors.end(), h.cyclic_factors().begin(), h.cyclic_factors().end());
    }
    return FiniteGroup(table, std::move(labels), std::move(factors));
}

// Elements f^a r^b, index a*m + b, with r f = f r^{-1}.
FiniteGroup make_dihedral(int m)
{
    if (m < 3)
        fail(ErrorCode::InvalidArgument, "dihedral group needs m >= 3");
    const int n = 2 * m;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x) {
        const int a = x / m;
        const int b = x % m;
        const std::string lab = power_label("f", a) + power_label("r", b);
        labels[x] = lab.empty() ? "1" : lab;
        for (int y = 0; y < n; ++y) {
            const int c = y / m;
            const int d = y % m;
            const int rot = mod((c == 0 ? b : -b) + d, m);
            table[x][y] = ((a + c) % 2) * m + rot;
        }
    }
    return FiniteGroup(table, std::move(labels));
}

// For odd m the group is realized as <h, s | h^m = s^4 = 1, s^-1 h s = h^-1>
// with elements s^a h^b at index a*m + b. For even m that presentation is a
// different group, so the standard <x, y | x^2m = 1, y^2 = x^m, y^-1 x y = x^-1>
// form is used with elements y^j x^i at index j*2m + i.
FiniteGroup make_dicyclic(int m)
{
    if (m < 2)
        fail(ErrorCode::InvalidArgument, "dicyclic group needs m >= 2");
    const int n = 4 * m;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    if (m % 2 == 1) {
        for (int x = 0; x < n; ++x) {
            const int a = x / m;
            const int b = x % m;
            const std::string lab = power_label("s", a) + power_label("h", b);
            labels[x] = lab.empty() ? "1" : lab;
            for (int y = 0; y < n; ++y) {
                const int c = y / m;
                const int d = y % m;
                // h^b s^c = s^c h^{b (-1)^c}
                const int hb = mod((c % 2 == 0 ? b : -b) + d, m);
                table[x][y] = ((a + c) % 4) * m + hb;
            }
        }
    } else {
        const int half = 2 * m;
        for (int x = 0; x < n; ++x) {
            const int j = x / half;
            const int i = x % half;
            const std::string lab = power_label("y", j) + power_label("x", i);
            labels[x] = lab.empty() ? "1" : lab;
            for (int z = 0; z < n; ++z) {
                const int l = z / half;
                const int k = z % half;
                int exponent = (l == 0 ? i : -i) + k;
                int ys = j + l;
                if (ys == 2) {
                    ys = 0;
                    exponent += m;
                }
                table[x][z] = ys * half + mod(exponent, half);
            }
        }
    }
    return FiniteGroup(table, std::move(labels));
}

int element_order(const FiniteGroup& g, int x)
{
    if (x < 0 || x >= g.order())
        fail(ErrorCode::InvalidArgument, "element index out of range");
    int d = 1;
    for (int p = x; p != g.identity(); p = g.mul(p, x))
        ++d;
    return d;
}

Sylow2Profile sylow2_profile(const FiniteGroup& g)
{
    Sylow2Profile profile;
    int n = g.order();
    while (n % 2 == 0) {
        n /= 2;
        profile.t *= 2;
        ++profile.l;
    }
    if (profile.t == 1)
        return profile;
    for (int x = 0; x < g.order(); ++x)
        if (element_order(g, x) == profile.t) {
            profile.cyclic = true;
            profile.witness = x;
            break;
        }
    return profile;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty())
        fail(ErrorCode::NotSubgroup, "empty element set");
    std::vector<int> inc(g.order(), -1);
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
        if (elements[i] < 0 || elements[i] >= g.order())
            fail(ErrorCode::InvalidArgument, "element index out of range");
        inc[elements[i]] = i;
    }
    const int m = static_cast<int>(elements.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const int prod = inc[g.mul(elements[a], elements[b])];
            if (prod < 0)
                fail(ErrorCode::NotSubgroup, "element set is not closed under multiplication");
            table[a][b] = prod;
        }
    std::vector<std::string> labels;
    labels.reserve(m);
    for (int e : elements)
        labels.push_back(g.label(e));
    // A closed finite subset containing products is a subgroup once it holds the identity.
    if (inc[g.identity()] < 0)
        fail(ErrorCode::NotSubgroup, "element set does not contain the identity");
    return Subgroup{FiniteGroup(table, std::move(labels)), std::move(elements)};
}

bool is_normal(const FiniteGroup& g, const Subgroup& h)
{
    const auto inc = h.inclusion(g.order());
    for (int x = 0; x < g.order(); ++x)
        for (int e : h.embedding)
            if (inc[g.mul(g.mul(g.inverse(x), e), x)] < 0)
                return false;
    return true;
}

Subgroup odd_part_subgroup(const FiniteGroup& g)
{
    const Sylow2Profile profile = sylow2_profile(g);
    if (!profile.cyclic_nontrivial())
        fail(ErrorCode::WrongGroupClass, "normal 2-complement requires a cyclic nontrivial Sylow 2-subgroup");

    std::vector<int> odd;
    for (int x = 0; x < g.order(); ++x)
        if (element_order(g, x) % 2 == 1)
            odd.push_back(x);
    if (static_cast<int>(odd.size()) * profile.t != g.order())
        fail(ErrorCode::NotClosed, "odd-order elements do not number n/t");

    std::optional<Subgroup> h;
    try {
        h = make_subgroup(g, odd);
    } catch (const Error& e) {
        fail(ErrorCode::NotClosed, std::string("odd-order elements are not a subgroup: ") + e.what());
    }
    if (!is_normal(g, *h))
        fail(ErrorCode::NotNormal, "odd-order subgroup is not normal");

    // G/H has order t; it is cyclic iff the witness p has p^j outside H for 0 < j < t.
    const auto inc = h->inclusion(g.order());
    int p = *profile.witness;
    int power = p;
    for (int j = 1; j < profile.t; ++j, power = g.mul(power, p))
        if (inc[power] >= 0)
            fail(ErrorCode::Consistency, "quotient by the odd-order subgroup is not cyclic");
    return std::move(*h);
}

std::vector<int> coset_representatives(const FiniteGroup& g, const Subgroup& h)
{
    if (h.embedding.empty() || g.order() % h.order() != 0)
        fail(ErrorCode::NotSubgroup, "subgroup order does not divide group order");
    const auto inc = h.inclusion(g.order());
    for (int a : h.embedding)
        for (int b : h.embedding)
            if (inc[g.mul(a, b)] < 0)
                fail(ErrorCode::NotSubgroup, "element set is not closed under multiplication");
    if (inc[g.identity()] < 0)
        fail(ErrorCode::NotSubgroup, "subgroup does not contain the identity");

    std::vector<int> reps{g.identity()};
    std::vector<char> covered(g.order(), 0);
    for (int e : h.embedding)
        covered[e] = 1;
    for (int x = 0; x < g.order(); ++x) {
        if (covered[x])
            continue;
        reps.push_back(x);
        for (int e : h.embedding)
            covered[g.mul(x, e)] = 1;
    }
    return reps;
}

OrderedFactors lexicographic_order(std::span<const int> moduli)
{
    OrderedFactors out;
    out.moduli.assign(moduli.begin(), moduli.end());
    long long total = 1;
    for (int m : moduli) {
        if (m < 1)
            fail(ErrorCode::InvalidArgument, "modulus must be positive");
        total *= m;
    }
    out.elements.reserve(static_cast<std::size_t>(total));
    std::vector<int> tuple(moduli.size(), 0);
    for (long long i = 0; i < total; ++i) {
        out.elements.push_back(tuple);
        for (std::size_t pos = tuple.size(); pos-- > 0;) {
            if (++tuple[pos] < moduli[pos])
                break;
            tuple[pos] = 0;
        }
    }
    return out;
}

std::vector<InterleavedElement> interleaved_order(int t, std::span<const int> odd_factors)
{
    if (t < 2 || (t & (t - 1)) != 0)
        fail(ErrorCode::InvalidArgument, "t must be a power of two, at least 2");
    int m = 1;
    for (int f : odd_factors) {
        if (f < 1)
            fail(ErrorCode::InvalidArgument, "odd factor must be positive");
        m *= f;
    }
    if (std::gcd(t, m) != 1)
        fail(ErrorCode::NotCoprime, "odd part must be coprime to t");
    const int n = t * m;
    std::vector<InterleavedElement> order;
    order.reserve(n);
    for (int i = 0; i < n; ++i)
        order.push_back({i % t, i % m});
    return order;
}

}  // namespace latincolor
