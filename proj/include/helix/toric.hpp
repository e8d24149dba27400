#pragma once
// Independent toric oracle for the intersection form: Neron-Severi lattice
// of the smooth toric surface spanned by a seed's rays, blow-up bookkeeping,
// and the isometry iota: K -> Lambda_(Y,D).

#include "helix/fan.hpp"
#include "helix/lattice.hpp"

namespace helix {

struct ToricNS {
    Fan fan;
    IMat inter;  // m x m intersection matrix of the boundary divisors D_i
};

ToricNS make_toric_ns(const Fan& fan);

// C.C from the intersection numbers alpha_i = C . D_i via the cyclic
// determinant formula; rejects alpha not satisfying sum alpha_i u_i = 0.
Int toric_self_intersection(const ToricNS& ns, const Vec& alphas);

// Same quantity through the stored intersection matrix (solve for C in the
// D_i basis, then pair). The two routes agreeing is the point of the oracle.
Int toric_self_intersection_via_matrix(const ToricNS& ns, const Vec& alphas);

// Class on the blown-up surface Y: a pullback part described by its
// intersection numbers with the boundary divisors, minus exceptional classes.
struct NSClass {
    Vec alpha;  // per fan ray: (pullback of C) . D_rho
    Vec exc;    // per seed index: coefficient of E_i
};

struct BlownNS {
    ToricNS toric;
    Seed seed;
    std::vector<int> ray_of;  // seed index -> fan ray carrying psi(e_i)
};

BlownNS make_blown_ns(const Seed& s);

NSClass iota(const BlownNS& b, const Vec& a);
Vec iota_inverse(const BlownNS& b, const NSClass& c);
Int ns_dot(const BlownNS& b, const NSClass& x, const NSClass& y);

struct OracleReport {
    struct Item {
        int p, q;
        Int lhs, rhs;  // iota(k_p).iota(k_q) vs (k_p, k_q)_S
        bool ok;
    };
    std::vector<Item> items;
    bool ok = true;
};

// Checks iota(k_p).iota(k_q) = (k_p, k_q)_S over a kernel basis.
OracleReport oracle_check(const Seed& s);

}  // namespace helix
