#pragma once
// Finite and affine roots of a del Pezzo lattice, reflections, the finite
// Weyl group by BFS closure, root-lattice type detection, and the
// constructive semidirect decomposition of the orthogonal group.

#include <optional>

#include "helix/surface.hpp"

namespace helix {

// Finite roots: {alpha in K_Z-perp : alpha^2 = -2}, stored as (0, C, 0).
std::vector<KClass> finite_roots(const Surface& S);

// Affine roots alpha + m delta with |m| <= height_bound.
std::vector<KClass> affine_roots(const Surface& S, Int height_bound);

// beta - chi(beta, alpha) alpha; requires chi(alpha, alpha) = 2 and
// alpha in Ker(psi).
KClass reflect(const Surface& S, const KClass& alpha, const KClass& beta);
IMat reflection_matrix(const Surface& S, const KClass& alpha);

struct WeylGroup {
    std::vector<IMat> elements;              // element 0 is the identity
    std::vector<std::vector<int>> words;     // words[e] = generator indices, apply last first
    std::vector<IMat> gens;
    std::vector<KClass> gen_roots;
    size_t order() const { return elements.size(); }
    int find(const IMat& g) const;           // -1 if absent
};

// Closure of the finite-root reflections; cached per surface.
const WeylGroup& weyl_closure(const Surface& S);

struct RootLatticeType {
    std::string label;                 // e.g. "A2+A1", "A0", "E8"
    std::optional<Int> extra_square;   // dP1: K-perp generator square; dP2: R(Z)-perp generator square
};

RootLatticeType root_lattice_type(const Surface& S);

// Validates Euler-isometry + rank/degree preservation; reason on failure.
bool is_orthogonal_element(const Surface& S, const IMat& f, std::string* why = nullptr);

struct OrthDecomp {
    IMat w;                 // finite Weyl part, fixes [O_Z]
    std::vector<int> word;  // reflection word for w in the closure generators
    Vec D;                  // K_Z-perp divisor with f = tensor(D) . w
};

OrthDecomp orthogonal_decompose(const Surface& S, const IMat& f);

}  // namespace helix
