#include "helix/lattice.hpp"

#include <algorithm>

namespace helix {

Ambient::Ambient(int n_, IMat psi_) : n(n_), psi(std::move(psi_)) {
    if (psi.rows != 2 || psi.cols != n) throw Error("psi must be a 2 x n matrix");
    if ((int)integer_kernel(psi).size() != n - 2) throw Error("psi must have rank 2");
}

Seed::Seed(Ambient a, IMat b) : amb(std::move(a)), basis(std::move(b)) {
    if (basis.rows != amb.n || basis.cols != amb.n) throw Error("seed basis must be n x n");
    Int d = det(basis);
    if (d != 1 && d != -1) throw Error("seed basis must be unimodular");
    for (int j = 0; j < amb.n; ++j) {
        V2 v = psi_of(j);
        if (v.is_zero()) throw Error("psi(e_i) must be nonzero");
        if (!is_primitive(v)) throw Error("psi(e_i) must be primitive");
    }
}

std::vector<V2> Seed::psi_images() const {
    std::vector<V2> vs(n());
    for (int j = 0; j < n(); ++j) vs[j] = psi_of(j);
    return vs;
}

Seed Seed::canonical() const {
    std::vector<int> idx(n());
    for (int i = 0; i < n(); ++i) idx[i] = i;
    std::vector<Vec> cols(n());
    std::vector<V2> ims = psi_images();
    for (int i = 0; i < n(); ++i) cols[i] = e(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int c = angle_cmp(ims[a], ims[b]);
        if (c != 0) return c < 0;
        return cols[a] < cols[b];
    });
    Seed r = *this;
    for (int i = 0; i < n(); ++i) r.basis.set_col(i, cols[idx[i]]);
    return r;
}

bool operator==(const Seed& a, const Seed& b) {
    if (!(a.amb == b.amb)) return false;
    return a.canonical().basis == b.canonical().basis;
}

Seed mutate_seed(const Seed& s, int j, int eps) {
    if (j < 0 || j >= s.n()) throw Error("mutation index out of range");
    if (eps != 1 && eps != -1) throw Error("mutation sign must be +-1");
    Seed r = s;
    for (int i = 0; i < s.n(); ++i) {
        if (i == j) {
            r.basis.set_col(j, vneg(s.e(j)));
        } else {
            Int c = eps * s.bracket(i, j);
            if (c > 0) r.basis.set_col(i, vadd(s.e(i), vscale(c, s.e(j))));
        }
    }
    return Seed(r.amb, r.basis);
}

Seed apply_mutation_word(const Seed& s, const std::vector<MutStep>& word) {
    Seed cur = s;
    for (const MutStep& m : word) cur = mutate_seed(cur, m.j, m.eps);
    return cur;
}

IMat T_matrix(const Seed& s, int j, int eps) {
    // x -> x + eps <x, e_j> e_j in reference coordinates: <x, e_j> is the
    // linear functional det(psi x, psi e_j).
    int n = s.n();
    V2 u = s.psi_of(j);
    Vec ej = s.e(j);
    IMat m = IMat::identity(n);
    for (int k = 0; k < n; ++k) {
        Vec ek(n, 0);
        ek[k] = 1;
        V2 w = s.amb.psi_of(ek);
        Int c = eps * cross(w, u);
        for (int i = 0; i < n; ++i) m.at(i, k) += c * ej[i];
    }
    return m;
}

Seed apply_T(const Seed& s, int j, int eps) {
    IMat t = T_matrix(s, j, eps);
    Seed r = s;
    r.basis = mat_mul(t, s.basis);
    return Seed(r.amb, r.basis);
}

CyclicSeed cyclic_order(const Seed& s) {
    std::vector<int> idx(s.n());
    for (int i = 0; i < s.n(); ++i) idx[i] = i;
    std::vector<V2> ims = s.psi_images();
    std::vector<Vec> cols(s.n());
    for (int i = 0; i < s.n(); ++i) cols[i] = s.e(i);
    // Parallel psi-images tie-break on column coordinates (deterministic;
    // parallel vectors have vanishing bracket so chi on K is unaffected).
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int c = angle_cmp(ims[a], ims[b]);
        if (c != 0) return c < 0;
        return cols[a] < cols[b];
    });
    return CyclicSeed{s, idx};
}

Int chi_tilde(const CyclicSeed& cs, const Vec& a, const Vec& b) {
    const Seed& s = cs.seed;
    IMat binv = inverse_unimodular(s.basis);
    Vec xa = mat_vec(binv, a), xb = mat_vec(binv, b);
    // position of each storage index in the cyclic order
    std::vector<int> pos(s.n());
    for (int k = 0; k < s.n(); ++k) pos[cs.order[k]] = k;
    Int total = 0;
    for (int i = 0; i < s.n(); ++i) {
        if (xa[i] == 0) continue;
        for (int j = 0; j < s.n(); ++j) {
            if (xb[j] == 0) continue;
            Int cij;
            if (i == j)
                cij = 1;
            else if (pos[i] > pos[j])
                cij = s.bracket(i, j);
            else
                cij = 0;
            total += xa[i] * xb[j] * cij;
        }
    }
    return total;
}

std::vector<Vec> kernel_basis(const Ambient& amb) { return integer_kernel(amb.psi); }

Int intersection_form(const Seed& s, const Vec& a, const Vec& b) {
    if (!is_zero(mat_vec(s.amb.psi, a)) || !is_zero(mat_vec(s.amb.psi, b)))
        throw Error("intersection form arguments must lie in Ker(psi)");
    return -chi_tilde(cyclic_order(s), a, b);
}

}  // namespace helix
