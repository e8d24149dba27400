#pragma once
// Seeds in a finite-rank lattice N with psi: N -> Z^2, their mutations,
// cyclic orderings, the bilinear form chi, and the intersection form on
// K = Ker(psi). All arithmetic is exact.

#include "helix/geom2d.hpp"
#include "helix/linalg.hpp"

namespace helix {

// N = Z^n in reference coordinates; psi is a 2 x n matrix of rank 2.
struct Ambient {
    int n = 0;
    IMat psi;  // 2 x n

    Ambient() = default;
    Ambient(int n_, IMat psi_);

    V2 psi_of(const Vec& v) const {
        Vec im = mat_vec(psi, v);
        return {im[0], im[1]};
    }
    friend bool operator==(const Ambient& a, const Ambient& b) { return a.n == b.n && a.psi == b.psi; }
};

// Basis {e_i} of N, stored as the columns of an n x n unimodular matrix.
// Column order is storage only; seed equality is multiset equality.
struct Seed {
    Ambient amb;
    IMat basis;  // n x n, column j = e_j

    Seed() = default;
    Seed(Ambient a, IMat b);

    int n() const { return amb.n; }
    Vec e(int j) const { return basis.col(j); }
    V2 psi_of(int j) const { return amb.psi_of(e(j)); }
    std::vector<V2> psi_images() const;
    // <e_i, e_j> = det(psi e_i, psi e_j)
    Int bracket(int i, int j) const { return cross(psi_of(i), psi_of(j)); }

    // Deterministic storage order: sort columns by (angle class, coordinates).
    Seed canonical() const;
    friend bool operator==(const Seed& a, const Seed& b);
};

struct CyclicSeed {
    Seed seed;
    std::vector<int> order;  // order[k] = storage index of k-th element, 0-based
};

// One mutation step; j is a 0-based storage index, eps is +1 or -1.
struct MutStep {
    int j = 0;
    int eps = +1;
};

Seed mutate_seed(const Seed& s, int j, int eps);
Seed apply_mutation_word(const Seed& s, const std::vector<MutStep>& word);

// The linear transformation T_{e_j}^eps (x -> x + eps <x, e_j> e_j) applied
// to every basis column; equals mutate twice at j with the same sign.
Seed apply_T(const Seed& s, int j, int eps);
// Same map as an n x n matrix on reference coordinates.
IMat T_matrix(const Seed& s, int j, int eps);

CyclicSeed cyclic_order(const Seed& s);

// chi(e_i, e_j) = 1 on the diagonal, <e_i, e_j> below it (in cyclic
// position), 0 above. Arguments in reference coordinates.
Int chi_tilde(const CyclicSeed& cs, const Vec& a, const Vec& b);

// Basis of K = Ker(psi), saturated in N.
std::vector<Vec> kernel_basis(const Ambient& amb);

// (a, b)_S = -chi(a, b) for a, b in K; rejects arguments outside K.
Int intersection_form(const Seed& s, const Vec& a, const Vec& b);

}  // namespace helix
