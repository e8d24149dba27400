#pragma once
// Del Pezzo surfaces as fixed abstract lattices, classes in the
// Grothendieck lattice K(Z) = Z[O] + NS(Z) + Z delta, the Euler form by
// Riemann-Roch, and tensoring by divisor classes.

#include "helix/geom2d.hpp"
#include "helix/lattice.hpp"

namespace helix {

enum class SurfaceKind { BlowupP2, P1xP1 };

// BlowupP2 with m = 0 is the plane itself.
struct Surface {
    SurfaceKind kind = SurfaceKind::BlowupP2;
    int m = 0;

    static Surface blowup_p2(int m);
    static Surface p1xp1();

    int rho() const { return kind == SurfaceKind::P1xP1 ? 2 : m + 1; }
    int n() const { return rho() + 2; }
    // NS basis is (H, E_1..E_m) or (f_1, f_2)
    IMat ns_form() const;
    Vec canonical_class() const;  // K_Z
    Int k2() const;
    Int ns_dot(const Vec& a, const Vec& b) const;
    Int deg(const Vec& c1) const;  // c1 . (-K_Z)
    Int k_divisibility() const;    // largest l with K_Z / l integral
    Vec degree_generator() const;  // divisor D with deg(D) = k_divisibility()

    friend bool operator==(const Surface& a, const Surface& b) { return a.kind == b.kind && a.m == b.m; }
    friend bool operator!=(const Surface& a, const Surface& b) { return !(a == b); }
    std::string name() const;
};

// (rank, first Chern class, chi - rank)
struct KClass {
    Int r = 0;
    Vec c1;
    Int m = 0;

    friend bool operator==(const KClass& a, const KClass& b) { return a.r == b.r && a.c1 == b.c1 && a.m == b.m; }
    friend bool operator!=(const KClass& a, const KClass& b) { return !(a == b); }
    friend bool operator<(const KClass& a, const KClass& b) {
        if (a.r != b.r) return a.r < b.r;
        if (a.c1 != b.c1) return a.c1 < b.c1;
        return a.m < b.m;
    }
    friend KClass operator+(const KClass& a, const KClass& b) { return {a.r + b.r, vadd(a.c1, b.c1), a.m + b.m}; }
    friend KClass operator-(const KClass& a, const KClass& b) { return {a.r - b.r, vsub(a.c1, b.c1), a.m - b.m}; }
    friend KClass operator*(Int c, const KClass& a) { return {c * a.r, vscale(c, a.c1), c * a.m}; }
    KClass operator-() const { return {-r, vneg(c1), -m}; }
};

KClass structure_sheaf(const Surface& S);
KClass skyscraper(const Surface& S);  // delta
KClass line_bundle(const Surface& S, const Vec& D);

Int chi_of(const Surface& S, const KClass& E);  // chi(E) = r + m
Int deg_of(const Surface& S, const KClass& E);
V2 psi_of(const Surface& S, const KClass& E);  // (rank, degree)

// chi(E, F) = r(E)chi(F) + r(F)chi(E) - r(E)r(F) - c1(E).c1(F) - r(F)d(E)
Int euler_chi(const Surface& S, const KClass& E, const KClass& F);

// E tensor O(D) for any divisor class D.
KClass tensor(const Surface& S, const KClass& E, const Vec& D);

// (r, c1..., m) coordinates on K(Z).
Vec to_coords(const Surface& S, const KClass& E);
KClass from_coords(const Surface& S, const Vec& v);
IMat psi_matrix(const Surface& S);        // 2 x n: rows (rank, degree)
IMat euler_matrix(const Surface& S);      // n x n: chi(x, y) = x^T C y
IMat tensor_matrix(const Surface& S, const Vec& D);  // matrix of tensoring on K(Z)

}  // namespace helix
