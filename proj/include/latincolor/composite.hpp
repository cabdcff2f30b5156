#pragma once

#include "latincolor/exact.hpp"
#include "latincolor/group.hpp"
#include "latincolor/group_spec.hpp"
#include "latincolor/latin.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace latincolor {

// L(G) with rows and columns ordered h_0..h_{m-1}, f_1 h_0, ..., f_{k-1} h_{m-1}
// for a normal subgroup H, cut into k x k latin subsquares of order m.
struct BlockDecomposition {
    FiniteGroup group;
    Subgroup subgroup;
    std::vector<int> coset_reps;  // f_0 = identity, f_1, ..., f_{k-1}
    std::vector<int> coset_of;    // element of G -> index of its coset
    std::vector<int> row_order;
    LatinSquare square;
    int m = 0;
    int k = 0;
    std::vector<std::vector<Subsquare>> blocks;  // blocks[i][j] = A_ij
    FiniteGroup quotient;                        // G/H on coset indices
    LatinSquare quotient_square;                 // K: K[i][j] = coset of f_i f_j
    // conjugation[j][x] = y with h_x f_j = f_j h_y (subgroup indices)
    std::vector<std::vector<int>> conjugation;
};

// Index map of a transversal of L(H) in H's native order: cells (i, phi[i]).
struct IndexMap {
    std::vector<int> phi;
};

struct MethodColoring {
    Coloring coloring;
    std::string method;  // diagonals | search-partition | abelian-n+2 | product | power-bound | three-halves
};

BlockDecomposition block_decomposition(const FiniteGroup& g, const Subgroup& h);

// Permutation pi of the subgroup indices with h_j p = p h_{pi(j)}. Throws
// NotNormal when p^-1 H p != H.
std::vector<int> conjugation_permutation(const FiniteGroup& g, const Subgroup& h, int p);

// m disjoint transversals of L(H) for |H| = m odd: the right diagonals when
// they are transversals in the native order, otherwise the right translates
// of one searched complete mapping. Throws SearchExhausted on budget.
std::vector<IndexMap> odd_transversal_decomposition(const FiniteGroup& h,
                                                    std::uint64_t budget = kDefaultSearchBudget);
Coloring index_map_coloring(const FiniteGroup& h, std::span<const IndexMap> maps);

// Colors every cell of A_ij by (class of K cell (i,j), class of the matching
// cell of L(H)), transporting the H coloring into each block through
// (a, b) -> (pi_j^-1(a), b). `h_coloring` must color a Cayley table of
// decomposition.subgroup.group; `q_coloring` colors a Cayley table of some
// group Q and `quotient_map` sends Q's elements to coset indices (empty: Q is
// decomposition.quotient itself). Empty classes are dropped.
Coloring product_coloring(const BlockDecomposition& decomposition, const Coloring& h_coloring,
                          const Coloring& q_coloring, std::span<const int> quotient_map = {});

// Cyclic nontrivial Sylow 2-subgroup of order t: at most m (t + 2) classes.
Coloring power_bound_coloring(const FiniteGroup& g);

struct ThreeHalvesColoring {
    Coloring coloring;
    std::vector<std::vector<Cell>> x_sets;  // X_0, ..., X_{m-1}
};

// Sylow 2-subgroup of order exactly 2 and n >= 3: 3n/2 classes.
ThreeHalvesColoring three_halves_coloring(const FiniteGroup& g);

// Block product for a spec: the first atom against the rest when the
// spec has several atoms, otherwise the odd-order normal subgroup against
// the cyclic quotient. Sub-colorings come from best_coloring.
MethodColoring product_method_coloring(const GroupSpec& spec, std::uint64_t budget = kDefaultSearchBudget);

// The verified coloring with the fewest classes among the applicable
// constructions.
MethodColoring best_coloring(const FiniteGroup& g, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace latincolor
