#include "helix/collection.hpp"

#include <algorithm>

namespace helix {

namespace {

// All operations are equivariant under global negation, so predicates work
// on the normalized (positive-rank) copy.
Collection normalized(const Collection& c, bool* was_shifted = nullptr) {
    bool all_pos = true, all_neg = true;
    for (const KClass& e : c.objs) {
        if (e.r <= 0) all_pos = false;
        if (e.r >= 0) all_neg = false;
    }
    if (was_shifted) *was_shifted = all_neg;
    if (all_pos) return c;
    if (!all_neg) throw Error("not a shift of a bundle collection: mixed-sign or zero ranks");
    Collection r = c;
    for (KClass& e : r.objs) e = -e;
    return r;
}

}  // namespace

VeryStrongCertificate check_very_strong(const Collection& c) {
    if (c.n() != c.S.n()) throw Error("collection length must equal rk K(Z)");
    for (int i = 0; i < c.n(); ++i) {
        if (euler_chi(c.S, c.objs[i], c.objs[i]) != 1) throw Error("chi(E_i, E_i) != 1");
        V2 v = psi_of(c.S, c.objs[i]);
        if (v.is_zero()) throw Error("(r, d) = (0, 0) for an object");
        if (igcd(v.x, v.y) != 1) throw Error("rank and degree not coprime");
    }
    for (int i = 0; i < c.n(); ++i)
        for (int j = i + 1; j < c.n(); ++j)
            if (euler_chi(c.S, c.objs[j], c.objs[i]) != 0) throw Error("chi(E_j, E_i) != 0 for i < j");

    VeryStrongCertificate cert;
    Collection nc = normalized(c, &cert.shifted);
    for (const KClass& e : nc.objs) cert.slopes.emplace_back(deg_of(nc.S, e), e.r);
    for (int i = 0; i + 1 < nc.n(); ++i) {
        auto [d1, r1] = cert.slopes[i];
        auto [d2, r2] = cert.slopes[i + 1];
        if (d1 * r2 > d2 * r1) throw Error("slope chain violated: mu_" + std::to_string(i + 1) + " > mu_" + std::to_string(i + 2));
    }
    auto [d1, r1] = cert.slopes.front();
    auto [dn, rn] = cert.slopes.back();
    if (dn * r1 > (d1 + c.S.k2() * r1) * rn) throw Error("slope chain violated: mu_n > mu_1 + K^2");
    return cert;
}

bool is_very_strong(const Collection& c) {
    try {
        check_very_strong(c);
        return true;
    } catch (const Error&) {
        return false;
    }
}

KClass left_mutate_class(const Surface& S, const KClass& F, const KClass& A) {
    return A - euler_chi(S, F, A) * F;
}

KClass right_mutate_class(const Surface& S, const KClass& A, const KClass& F) {
    return A - euler_chi(S, A, F) * F;
}

std::vector<KClass> dual_collection(const Collection& c) {
    std::vector<KClass> duals(c.n());
    for (int j = 0; j < c.n(); ++j) {
        KClass x = c.objs[j];
        for (int t = j - 1; t >= 0; --t) x = left_mutate_class(c.S, c.objs[t], x);
        duals[j] = x;
    }
    return duals;
}

Seed seed_of(const Collection& c) {
    check_very_strong(c);
    Collection nc = normalized(c);
    std::vector<KClass> duals = dual_collection(nc);
    Ambient amb(nc.S.n(), psi_matrix(nc.S));
    IMat basis(nc.S.n(), nc.S.n());
    for (int j = 0; j < nc.n(); ++j) basis.set_col(j, to_coords(nc.S, duals[j]));
    Seed s(amb, basis);
    if (!cyclically_ordered(s.psi_images())) throw Error("dual psi images not cyclically ordered");
    return s;
}

Collection rotate_thread(const Collection& c, int k) {
    check_very_strong(c);
    Collection cur = c;
    Vec K = c.S.canonical_class();
    for (; k > 0; --k) {
        Collection next = cur;
        for (int i = 0; i + 1 < cur.n(); ++i) next.objs[i] = cur.objs[i + 1];
        next.objs[cur.n() - 1] = tensor(c.S, cur.objs[0], vneg(K));
        cur = std::move(next);
    }
    for (; k < 0; ++k) {
        Collection next = cur;
        for (int i = 0; i + 1 < cur.n(); ++i) next.objs[i + 1] = cur.objs[i];
        next.objs[0] = tensor(c.S, cur.objs[cur.n() - 1], K);
        cur = std::move(next);
    }
    return cur;
}

namespace {

Int dual_bracket(const Collection& c, const std::vector<KClass>& duals, int a, int b) {
    return cross(psi_of(c.S, duals[a]), psi_of(c.S, duals[b]));
}

}  // namespace

bool is_good(const Collection& c, int j) {
    std::vector<KClass> duals = dual_collection(c);
    for (int k = 0; k < c.n(); ++k) {
        if (k == j) continue;
        Int br = dual_bracket(c, duals, k, j);
        if (k > j && br > 0) return false;
        if (k < j && br < 0) return false;
    }
    return true;
}

bool is_mirror_good(const Collection& c, int j) {
    std::vector<KClass> duals = dual_collection(c);
    for (int k = 1; k < c.n(); ++k) {
        Int br = dual_bracket(c, duals, k, 0);
        if (k <= j && br > 0) return false;
        if (k > j && br < 0) return false;
    }
    return true;
}

GoodThread find_good_thread(const Collection& c, int j) {
    check_very_strong(c);
    Collection cur = c;
    int jj = j;
    for (int o = 0; o < c.n(); ++o) {
        if (is_good(cur, jj)) return GoodThread{cur, o, jj};
        cur = rotate_thread(cur, 1);
        jj = (jj + c.n() - 1) % c.n();
    }
    throw Error("no good thread found within n rotations");
}

Collection tilt_plus(const Collection& c, int j) {
    if (j <= 0 || j >= c.n()) throw Error("tilt index must be 1..n-1");
    if (!is_good(c, j)) throw Error("collection is not good for the tilted object");
    std::vector<KClass> duals = dual_collection(c);
    Collection out = c;
    out.objs.clear();
    out.objs.push_back(-duals[j]);
    for (int i = 0; i < c.n(); ++i)
        if (i != j) out.objs.push_back(c.objs[i]);
    check_very_strong(out);
    return out;
}

Collection tilt_minus(const Collection& c, int j) {
    if (j <= 0 || j >= c.n()) throw Error("tilt index must be 1..n-1");
    if (!is_mirror_good(c, j)) throw Error("collection is not mirror-good for the right tilt");
    KClass x = c.objs[0];
    for (int t = 1; t <= j; ++t) x = right_mutate_class(c.S, x, c.objs[t]);
    Collection out = c;
    out.objs.clear();
    for (int t = 1; t <= j; ++t) out.objs.push_back(c.objs[t]);
    out.objs.push_back(-x);
    for (int t = j + 1; t < c.n(); ++t) out.objs.push_back(c.objs[t]);
    check_very_strong(out);
    return out;
}

Collection reorder(const Collection& c, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= c.n() || i == j) throw Error("reorder indices out of range");
    for (int p = i; p <= j; ++p)
        for (int q = p + 1; q <= j; ++q)
            if (cross(psi_of(c.S, c.objs[p]), psi_of(c.S, c.objs[q])) != 0)
                throw Error("reorder block is not mutually orthogonal (unequal slopes)");
    Collection out = c;
    std::swap(out.objs[i], out.objs[j]);
    check_very_strong(out);
    return out;
}

Collection tensor_collection(const Collection& c, const Vec& D) {
    Collection out = c;
    for (KClass& e : out.objs) e = tensor(c.S, e, D);
    return out;
}

Collection shift_collection(const Collection& c, int k) {
    Collection out = c;
    if (((k % 2) + 2) % 2 == 1)
        for (KClass& e : out.objs) e = -e;
    return out;
}

Collection apply_op(const Collection& c, const TraceOp& op) {
    switch (op.kind) {
        case TraceOp::Rotate:
            return rotate_thread(c, op.k);
        case TraceOp::Shift:
            return shift_collection(c, op.k);
        case TraceOp::Reorder:
            return reorder(c, op.i, op.j);
        case TraceOp::Tensor:
            return tensor_collection(c, op.c1);
        case TraceOp::TiltPlus:
            return tilt_plus(c, op.j);
        case TraceOp::TiltMinus:
            return tilt_minus(c, op.j);
    }
    throw Error("unknown trace operation");
}

Collection replay(const Collection& c, const Trace& t) {
    Collection cur = c;
    for (size_t i = 0; i < t.size(); ++i) {
        try {
            cur = apply_op(cur, t[i]);
        } catch (const Error& e) {
            throw ReplayError((int)i, e.what());
        }
    }
    return cur;
}

Trace inverse_trace(const Trace& t) {
    Trace inv;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        switch (it->kind) {
            case TraceOp::Rotate:
                inv.push_back(TraceOp::rotate(-it->k));
                break;
            case TraceOp::Shift:
                inv.push_back(TraceOp::shift(-it->k));
                break;
            case TraceOp::Reorder:
                inv.push_back(*it);
                break;
            case TraceOp::Tensor:
                inv.push_back(TraceOp::tensor(vneg(it->c1)));
                break;
            case TraceOp::TiltPlus:
                inv.push_back(TraceOp::tilt_minus(it->j));
                break;
            case TraceOp::TiltMinus:
                inv.push_back(TraceOp::tilt_plus(it->j));
                break;
        }
    }
    return inv;
}

}  // namespace helix
