#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace latincolor {

// A finite group given extensionally by its multiplication table. Elements
// are the indices 0..order()-1.
class FiniteGroup {
public:
    // `table[a][b]` is the index of a*b. `cyclic_factors`, when non-empty,
    // records that the group is Z_{f0} x Z_{f1} x ... with element index equal
    // to the mixed-radix encoding of the coordinate tuple.
    FiniteGroup(const std::vector<std::vector<int>>& table, std::vector<std::string> labels,
                std::vector<int> cyclic_factors = {});

    int order() const noexcept { return order_; }
    int identity() const noexcept { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    int inverse(int a) const { return inverse_[a]; }
    int power(int a, long long e) const;

    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<int>& cyclic_factors() const noexcept { return cyclic_factors_; }

    bool is_abelian() const;
    std::vector<std::vector<int>> table() const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b)
    {
        return a.order_ == b.order_ && a.table_ == b.table_;
    }

private:
    int order_ = 0;
    int identity_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
    std::vector<int> cyclic_factors_;
};

// Largest power of two dividing the order, and whether a Sylow 2-subgroup is
// cyclic. For odd order t == 1 and `cyclic` is false.
struct Sylow2Profile {
    int t = 1;
    int l = 0;
    bool cyclic = false;
    std::optional<int> witness;  // an element of order t when cyclic

    bool trivial() const noexcept { return t == 1; }
    bool cyclic_nontrivial() const noexcept { return cyclic && t >= 2; }
};

// A subgroup carried as a group in its own right plus the embedding of its
// elements into the parent (`embedding[i]` is the parent index of element i).
struct Subgroup {
    FiniteGroup group;
    std::vector<int> embedding;

    int order() const noexcept { return group.order(); }
    // Parent index -> subgroup index, -1 for elements outside the subgroup.
    std::vector<int> inclusion(int parent_order) const;
};

struct OrderedFactors {
    std::vector<int> moduli;
    std::vector<std::vector<int>> elements;

    int index_of(std::span<const int> tuple) const;
};

// Position i of the ordering of Z_t x H holds (i mod t, h_{i mod m}); the
// second coordinate is the index of h in the lexicographic order of H.
struct InterleavedElement {
    int two_part;
    int odd_index;

    friend bool operator==(const InterleavedElement&, const InterleavedElement&) = default;
};

FiniteGroup make_cyclic(int n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup make_dihedral(int m);
FiniteGroup make_dicyclic(int m);

int element_order(const FiniteGroup& g, int x);
Sylow2Profile sylow2_profile(const FiniteGroup& g);

// Build a subgroup from a set of parent elements; throws NotSubgroup when the
// set is not closed under multiplication.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

// The normal subgroup of odd-order elements (normal 2-complement) of a group
// whose Sylow 2-subgroup is cyclic and nontrivial.
Subgroup odd_part_subgroup(const FiniteGroup& g);

// Left coset representatives f_0 == identity, f_1, ..., each the minimum
// element index of its coset, ordered by that minimum.
std::vector<int> coset_representatives(const FiniteGroup& g, const Subgroup& h);

OrderedFactors lexicographic_order(std::span<const int> moduli);
std::vector<InterleavedElement> interleaved_order(int t, std::span<const int> odd_factors);

}  // namespace latincolor
