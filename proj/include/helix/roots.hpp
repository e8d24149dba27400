#pragma once
// Roots of a mutation class discovered by BFS over mutation-equivalent
// seeds, and the swap automorphisms t_jk for parallel basis vectors.

#include "helix/lattice.hpp"

namespace helix {

struct Root {
    Vec alpha;                  // e_j - e_k in reference coordinates
    std::vector<MutStep> word;  // mutations from the queried seed to the witness
    int j = 0, k = 0;           // storage indices in the witness seed
};

// All roots visible within the given mutation depth (an under-approximation
// of the full root set; never an over-approximation). Closed under negation.
std::vector<Root> find_roots(const Seed& s, int depth);

// The automorphism of N permuting e_j and e_k (requires psi(e_j) = psi(e_k)),
// as an n x n matrix in reference coordinates.
IMat swap_parallel(const Seed& s, int j, int k);

}  // namespace helix
