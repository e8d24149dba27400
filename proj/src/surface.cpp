#include "helix/surface.hpp"

namespace helix {

Surface Surface::blowup_p2(int m) {
    if (m < 0 || m > 8) throw Error("blow-up count must be 0..8");
    return Surface{SurfaceKind::BlowupP2, m};
}

Surface Surface::p1xp1() { return Surface{SurfaceKind::P1xP1, 0}; }

IMat Surface::ns_form() const {
    IMat g(rho(), rho());
    if (kind == SurfaceKind::P1xP1) {
        g.at(0, 1) = g.at(1, 0) = 1;
    } else {
        g.at(0, 0) = 1;
        for (int i = 1; i < rho(); ++i) g.at(i, i) = -1;
    }
    return g;
}

Vec Surface::canonical_class() const {
    Vec k(rho(), 0);
    if (kind == SurfaceKind::P1xP1) {
        k[0] = k[1] = -2;
    } else {
        k[0] = -3;
        for (int i = 1; i < rho(); ++i) k[i] = 1;
    }
    return k;
}

Int Surface::k2() const { return kind == SurfaceKind::P1xP1 ? 8 : 9 - m; }

Int Surface::ns_dot(const Vec& a, const Vec& b) const {
    Vec gb = mat_vec(ns_form(), b);
    Int r = 0;
    for (int i = 0; i < rho(); ++i) r += a[i] * gb[i];
    return r;
}

Int Surface::deg(const Vec& c1) const { return -ns_dot(c1, canonical_class()); }

Int Surface::k_divisibility() const { return gcd_of(canonical_class()); }

Vec Surface::degree_generator() const {
    Vec d(rho(), 0);
    if (kind == SurfaceKind::P1xP1) {
        d[0] = 1;  // f_1, degree 2
    } else if (m == 0) {
        d[0] = 1;  // H, degree 3
    } else {
        d[rho() - 1] = 1;  // E_m, degree 1
    }
    if (deg(d) != k_divisibility()) throw Error("degree generator mismatch");
    return d;
}

std::string Surface::name() const {
    if (kind == SurfaceKind::P1xP1) return "P1xP1";
    if (m == 0) return "P2";
    return "dP" + std::to_string(m);
}

KClass structure_sheaf(const Surface& S) { return KClass{1, Vec(S.rho(), 0), 0}; }

KClass skyscraper(const Surface& S) { return KClass{0, Vec(S.rho(), 0), 1}; }

KClass line_bundle(const Surface& S, const Vec& D) { return tensor(S, structure_sheaf(S), D); }

Int chi_of(const Surface& S, const KClass& E) {
    (void)S;
    return E.r + E.m;
}

Int deg_of(const Surface& S, const KClass& E) { return S.deg(E.c1); }

V2 psi_of(const Surface& S, const KClass& E) { return {E.r, deg_of(S, E)}; }

Int euler_chi(const Surface& S, const KClass& E, const KClass& F) {
    return E.r * chi_of(S, F) + F.r * chi_of(S, E) - E.r * F.r - S.ns_dot(E.c1, F.c1) - F.r * deg_of(S, E);
}

KClass tensor(const Surface& S, const KClass& E, const Vec& D) {
    if ((int)D.size() != S.rho()) throw Error("divisor class has wrong rank");
    // chi(E(D)) = chi(E) + c1(E).D + (r/2)(D^2 - D.K); the parenthesis is
    // even for every divisor class, so the update is integral.
    Int dd = S.ns_dot(D, D) - S.ns_dot(D, S.canonical_class());
    if (dd % 2 != 0) throw Error("tensor update not integral");
    KClass out;
    out.r = E.r;
    out.c1 = vadd(E.c1, vscale(E.r, D));
    out.m = E.m + S.ns_dot(E.c1, D) + E.r * (dd / 2);
    return out;
}

Vec to_coords(const Surface& S, const KClass& E) {
    Vec v(S.n());
    v[0] = E.r;
    for (int i = 0; i < S.rho(); ++i) v[1 + i] = E.c1[i];
    v[S.n() - 1] = E.m;
    return v;
}

KClass from_coords(const Surface& S, const Vec& v) {
    if ((int)v.size() != S.n()) throw Error("coordinate vector has wrong size");
    KClass E;
    E.r = v[0];
    E.c1.assign(v.begin() + 1, v.end() - 1);
    E.m = v[S.n() - 1];
    return E;
}

IMat psi_matrix(const Surface& S) {
    IMat psi(2, S.n());
    psi.at(0, 0) = 1;
    Vec mk = vneg(S.canonical_class());
    IMat g = S.ns_form();
    Vec row = mat_vec(g, mk);  // deg of NS basis vectors
    for (int i = 0; i < S.rho(); ++i) psi.at(1, 1 + i) = row[i];
    return psi;
}

IMat euler_matrix(const Surface& S) {
    int n = S.n();
    IMat C(n, n);
    for (int i = 0; i < n; ++i) {
        Vec ei(n, 0);
        ei[i] = 1;
        KClass Ei = from_coords(S, ei);
        for (int j = 0; j < n; ++j) {
            Vec ej(n, 0);
            ej[j] = 1;
            C.at(i, j) = euler_chi(S, Ei, from_coords(S, ej));
        }
    }
    return C;
}

IMat tensor_matrix(const Surface& S, const Vec& D) {
    int n = S.n();
    IMat T(n, n);
    for (int j = 0; j < n; ++j) {
        Vec ej(n, 0);
        ej[j] = 1;
        T.set_col(j, to_coords(S, tensor(S, from_coords(S, ej), D)));
    }
    return T;
}

}  // namespace helix
