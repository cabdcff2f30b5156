#pragma once

#include "latincolor/group.hpp"
#include "latincolor/latin.hpp"
#include "latincolor/lsq_graph.hpp"

#include <span>
#include <vector>

namespace latincolor {

// Parameters of the (n+2)-coloring for an Abelian group G = Z_t x H with
// t = 2^l >= 2 and |H| = m odd.
struct AbelianPlan {
    int n = 0;
    int t = 0;
    int l = 0;
    int m = 0;
    int q = 0;   // n / 2
    int k = 0;   // ceil(n / 4)
    int q0 = 0;
    int q1 = 0;
    std::vector<int> odd_factors;
    std::vector<InterleavedElement> interleaved;
    std::vector<int> ordering;  // interleaved position -> element index of G
};

struct DeletionSets {
    std::vector<Cell> x;        // x_0, ..., x_{k-1}
    std::vector<Cell> x_prime;  // x'_0, ..., x'_{k-1}
    std::vector<Cell> y;        // y_0, ..., y_{q-k-1}
    std::vector<Cell> y_prime;

    std::vector<Cell> x_set() const;
    std::vector<Cell> y_set() const;
};

struct AbelianColoring {
    Coloring coloring;
    AbelianPlan plan;
    DeletionSets deletions;
    std::vector<LadderCertificate> ladders;  // one per diagonal pair D_i
};

// Requires cyclic factor metadata (groups built from Z<k> atoms). Throws
// WrongGroupClass for odd order, non-cyclic Sylow 2-subgroup, non-Abelian
// input, or n == 2.
AbelianPlan plan(const FiniteGroup& g);

LatinSquare plan_square(const FiniteGroup& g, const AbelianPlan& p);

// D_i = T_{2i} u T_{2i+1} for i in [q].
std::vector<std::vector<Cell>> build_diagonal_pairs(const LatinSquare& square, const AbelianPlan& p);
DeletionSets build_deletion_sets(const AbelianPlan& p);

// Colors 2i and 2i+1 go to the two sides of ladder i (even color on the side
// holding the rim successor of the deleted x- or y-type cell); colors 2q and
// 2q+1 are X and Y. Throws Consistency if any step of the construction fails.
AbelianColoring abelian_n_plus_2_coloring(const FiniteGroup& g);

struct PhiCheck {
    bool injective_for_all = true;
    bool bad_s = false;  // gcd(s + 1, n) != 1: injectivity is not guaranteed
    int failing_c = -1;
    int failing_d = -1;
};

// Evaluates i -> g_{i+c} + g_{s i + d} over the lexicographic ordering of
// Z_{f0} x Z_{f1} x ... (odd order) for one (c, d).
bool phi_injective(std::span<const int> odd_factors, int s, int c, int d);
// Exhaustive over all c, d in [n].
PhiCheck check_phi_injective(std::span<const int> odd_factors, int s);

}  // namespace latincolor
