#include "latincolor/group_spec.hpp"

#include "latincolor/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

namespace latincolor {

namespace {

    constexpr long long kMaxSpecOrder = 1024;

    // Partitions of e into non-increasing parts.
    void partitions(int e, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out)
    {
        if (e == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(e, max_part); part >= 1; --part) {
            current.push_back(part);
            partitions(e - part, part, current, out);
            current.pop_back();
        }
    }

    int ipow(int base, int e)
    {
        int r = 1;
        while (e-- > 0)
            r *= base;
        return r;
    }

}  // namespace

int GroupAtom::order() const
{
    switch (kind) {
    case Kind::Cyclic: return k;
    case Kind::Dihedral: return 2 * k;
    case Kind::Dicyclic: return 4 * k;
    }
    return 0;
}

std::string GroupAtom::to_string() const
{
    switch (kind) {
    case Kind::Cyclic: return "Z" + std::to_string(k);
    case Kind::Dihedral: return "D" + std::to_string(k);
    case Kind::Dicyclic: return "Dic" + std::to_string(k);
    }
    return {};
}

FiniteGroup GroupAtom::build() const
{
    switch (kind) {
    case Kind::Cyclic: return make_cyclic(k);
    case Kind::Dihedral: return make_dihedral(k);
    case Kind::Dicyclic: return make_dicyclic(k);
    }
    fail(ErrorCode::InvalidArgument, "unknown atom kind");
}

int GroupSpec::order() const
{
    int n = 1;
    for (const auto& a : atoms)
        n *= a.order();
    return n;
}

std::string GroupSpec::to_string() const
{
    std::string out;
    for (const auto& a : atoms) {
        if (!out.empty())
            out += 'x';
        out += a.to_string();
    }
    return out;
}

FiniteGroup GroupSpec::build() const
{
    if (atoms.empty())
        fail(ErrorCode::InvalidArgument, "empty group spec");
    FiniteGroup g = atoms.front().build();
    for (std::size_t i = 1; i < atoms.size(); ++i)
        g = direct_product(g, atoms[i].build());
    return g;
}

GroupSpec parse_group_spec(std::string_view text)
{
    GroupSpec spec;
    long long total = 1;
    std::size_t pos = 0;
    if (text.empty())
        fail(ErrorCode::ParseError, "empty group spec");
    while (true) {
        const std::size_t end = std::min(text.find('x', pos), text.size());
        const std::string_view token = text.substr(pos, end - pos);

        GroupAtom atom{GroupAtom::Kind::Cyclic, 0};
        std::string_view digits;
        if (token.starts_with("Dic")) {
            atom.kind = GroupAtom::Kind::Dicyclic;
            digits = token.substr(3);
        } else if (token.starts_with("D")) {
            atom.kind = GroupAtom::Kind::Dihedral;
            digits = token.substr(1);
        } else if (token.starts_with("Z")) {
            atom.kind = GroupAtom::Kind::Cyclic;
            digits = token.substr(1);
        } else {
            fail(ErrorCode::ParseError, "unknown atom '" + std::string(token) + "' in group spec");
        }
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            fail(ErrorCode::ParseError, "atom '" + std::string(token) + "' needs a decimal parameter");
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), atom.k);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            fail(ErrorCode::ParseError, "atom parameter out of range in '" + std::string(token) + "'");
        if ((atom.kind == GroupAtom::Kind::Cyclic && atom.k < 1) || (atom.kind == GroupAtom::Kind::Dihedral && atom.k < 3)
            || (atom.kind == GroupAtom::Kind::Dicyclic && atom.k < 2))
            fail(ErrorCode::ParseError, "atom parameter too small in '" + std::string(token) + "'");
        total *= atom.order();
        if (total > kMaxSpecOrder)
            fail(ErrorCode::ParseError, "group order exceeds " + std::to_string(kMaxSpecOrder));
        spec.atoms.push_back(atom);

        if (end == text.size())
            break;
        pos = end + 1;
    }
    return spec;
}

FiniteGroup build_group(std::string_view text)
{
    return parse_group_spec(text).build();
}

std::vector<std::string> builtin_group_specs(int max_order)
{
    std::vector<std::string> out;
    for (int n = 1; n <= max_order; ++n) {
        // prime factorization
        std::vector<std::pair<int, int>> primes;
        int rest = n;
        for (int p = 2; p * p <= rest; ++p) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            if (e > 0)
                primes.push_back({p, e});
        }
        if (rest > 1)
            primes.push_back({rest, 1});

        if (n == 1) {
            out.push_back("Z1");
        } else {
            // cartesian product over primes of partitions of the exponent
            std::vector<std::vector<std::vector<int>>> choices;
            for (auto [p, e] : primes) {
                std::vector<int> cur;
                std::vector<std::vector<int>> parts;
                partitions(e, e, cur, parts);
                choices.push_back(std::move(parts));
            }
            std::vector<std::size_t> idx(choices.size(), 0);
            while (true) {
                std::string spec;
                for (std::size_t i = 0; i < primes.size(); ++i)
                    for (int part : choices[i][idx[i]]) {
                        if (!spec.empty())
                            spec += 'x';
                        spec += "Z" + std::to_string(ipow(primes[i].first, part));
                    }
                out.push_back(spec);
                std::size_t i = 0;
                for (; i < idx.size(); ++i) {
                    if (++idx[i] < choices[i].size())
                        break;
                    idx[i] = 0;
                }
                if (i == idx.size())
                    break;
            }
            if (primes.size() > 1)
                out.push_back("Z" + std::to_string(n));
        }
        if (n % 2 == 0 && n / 2 >= 3)
            out.push_back("D" + std::to_string(n / 2));
        if (n % 4 == 0 && n / 4 >= 2)
            out.push_back("Dic" + std::to_string(n / 4));
    }
    return out;
}

}  // namespace latincolor
