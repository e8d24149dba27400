#include "helix/qform.hpp"

#include <algorithm>

namespace helix {

namespace {

// Clear denominators and divide by the gcd.
Vec to_primitive_int(const RVec& v) {
    Int lcm = 1;
    for (const Rat& r : v) lcm = lcm / igcd(lcm, r.den) * r.den;
    Vec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i].num * (lcm / v[i].den);
    return primitive_part(w);
}

}  // namespace

QPCertificate is_q_painleve(const Seed& s) {
    QPCertificate cert;
    std::vector<Vec> K = kernel_basis(s.amb);
    int k = (int)K.size();
    if (k == 0) {
        cert.note = "Ker(psi) is trivial; form negative definite vacuously";
        return cert;
    }

    // Gram matrix of -(,)_S on a kernel basis; we test it for positive
    // semi-definiteness, tracking basis combinations for certificates.
    std::vector<RVec> M(k, RVec(k));
    for (int p = 0; p < k; ++p)
        for (int q = p; q < k; ++q) {
            Rat v = Rat(-intersection_form(s, K[p], K[q]));
            M[p][q] = v;
            M[q][p] = v;
        }
    std::vector<RVec> comb(k, RVec(k, Rat(0)));  // comb[i] = coords of c_i in K-basis
    for (int i = 0; i < k; ++i) comb[i][i] = Rat(1);

    auto lift = [&](const RVec& c) {
        RVec full(s.n(), Rat(0));
        for (int p = 0; p < k; ++p)
            for (int i = 0; i < s.n(); ++i) full[i] = full[i] + c[p] * Rat(K[p][i]);
        return to_primitive_int(full);
    };

    std::vector<int> active(k);
    for (int i = 0; i < k; ++i) active[i] = i;
    while (true) {
        int piv = -1;
        for (int i : active) {
            if (M[i][i].sign() < 0) {
                cert.positive_witness = lift(comb[i]);
                cert.note = "intersection form takes a positive value";
                return cert;
            }
            if (piv < 0 && M[i][i].sign() > 0) piv = i;
        }
        if (piv < 0) {
            // All active diagonal entries vanish. A nonzero off-diagonal entry
            // gives an indefinite 2x2 block; otherwise the active vectors
            // span the radical.
            for (size_t a = 0; a < active.size(); ++a)
                for (size_t b = a + 1; b < active.size(); ++b) {
                    int i = active[a], j = active[b];
                    if (!M[i][j].is_zero()) {
                        // Q(c_i - sgn(M_ij) c_j) = -2 |M_ij| < 0
                        RVec w = comb[i];
                        int sg = M[i][j].sign();
                        for (int t = 0; t < k; ++t) w[t] = w[t] - Rat(sg) * comb[j][t];
                        cert.positive_witness = lift(w);
                        cert.note = "intersection form takes a positive value";
                        return cert;
                    }
                }
            if (active.empty()) {
                cert.note = "form negative definite (trivial radical)";
                return cert;
            }
            cert.q_painleve = true;
            cert.radical = lift(comb[active.front()]);
            cert.note = "negative semi-definite with nontrivial radical";
            return cert;
        }
        // Congruence step: c_i -= (M_ip / M_pp) c_p for the other rows, under
        // which M'[i][j] = M[i][j] - f_i f_j M_pp stays symmetric.
        std::vector<int> rest;
        for (int i : active)
            if (i != piv) rest.push_back(i);
        std::vector<Rat> f(k, Rat(0));
        for (int i : rest) f[i] = M[i][piv] / M[piv][piv];
        for (int i : rest) {
            if (f[i].is_zero()) continue;
            for (int t = 0; t < k; ++t) comb[i][t] = comb[i][t] - f[i] * comb[piv][t];
        }
        for (int i : rest)
            for (int j : rest) M[i][j] = M[i][j] - f[i] * f[j] * M[piv][piv];
        for (int i : rest) {
            M[i][piv] = Rat(0);
            M[piv][i] = Rat(0);
        }
        active = rest;
    }
}

DeltaClass delta_class(const Seed& s) {
    QPCertificate cert = is_q_painleve(s);
    if (!cert.q_painleve) throw Error("delta class requires a q-Painleve seed: " + cert.note);

    // Radical of the Gram matrix over a kernel basis, lifted to N.
    std::vector<Vec> K = kernel_basis(s.amb);
    int k = (int)K.size();
    IMat G(k, k);
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) G.at(p, q) = intersection_form(s, K[p], K[q]);
    std::vector<Vec> rad = integer_kernel(G);
    if (rad.size() != 1)
        throw Error("radical rank " + std::to_string(rad.size()) + " != 1; no unique positive generator");
    Vec delta(s.n(), 0);
    for (int p = 0; p < k; ++p) delta = vadd(delta, vscale(rad[0][p], K[p]));
    delta = primitive_part(delta);

    Vec coeffs = mat_vec(inverse_unimodular(s.basis), delta);
    bool all_pos = std::all_of(coeffs.begin(), coeffs.end(), [](Int c) { return c > 0; });
    bool all_neg = std::all_of(coeffs.begin(), coeffs.end(), [](Int c) { return c < 0; });
    if (all_neg) {
        delta = vneg(delta);
        coeffs = vneg(coeffs);
        all_pos = true;
    }
    if (!all_pos) throw Error("no strictly positive radical vector exists");

    if (intersection_form(s, delta, delta) != 0) throw Error("delta class is not isotropic");
    if (!is_zero(mat_vec(s.amb.psi, delta))) throw Error("delta class is not in Ker(psi)");
    return DeltaClass{delta, coeffs};
}

}  // namespace helix
