#include "helix/connector.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace helix {

namespace {

std::vector<V2> dual_psi(const Collection& c) {
    std::vector<V2> out;
    for (const KClass& f : dual_collection(c)) out.push_back(psi_of(c.S, f));
    return out;
}

struct RealizedMove {
    Trace steps;
    Collection result;
};

// Every abstract seed mutation, realized on the collection: mu_j^+ through a
// good thread, mu^- through a rotation followed by a right tilt at the first
// valid split.
std::vector<RealizedMove> realized_moves(const Collection& c) {
    std::vector<RealizedMove> moves;
    int n = c.n();
    for (int j = 0; j < n; ++j) {
        Collection cur = c;
        int jj = j;
        for (int o = 0; o < n; ++o) {
            if (jj != 0 && is_good(cur, jj)) {
                RealizedMove m;
                if (o != 0) m.steps.push_back(TraceOp::rotate(o));
                m.steps.push_back(TraceOp::tilt_plus(jj));
                m.result = tilt_plus(cur, jj);
                moves.push_back(std::move(m));
                break;
            }
            cur = rotate_thread(cur, 1);
            jj = (jj + n - 1) % n;
        }
    }
    for (int o = 0; o < n; ++o) {
        Collection cur = o == 0 ? c : rotate_thread(c, o);
        for (int j = 1; j < n; ++j) {
            if (!is_mirror_good(cur, j)) continue;
            RealizedMove m;
            if (o != 0) m.steps.push_back(TraceOp::rotate(o));
            m.steps.push_back(TraceOp::tilt_minus(j));
            m.result = tilt_minus(cur, j);
            moves.push_back(std::move(m));
            break;
        }
    }
    return moves;
}

Vec collection_key(const Collection& c) {
    Vec key;
    for (const KClass& e : c.objs) {
        Vec v = to_coords(c.S, e);
        key.insert(key.end(), v.begin(), v.end());
    }
    return key;
}

M2 solve_sl2(const std::vector<V2>& from, const std::vector<V2>& to, bool* ok) {
    *ok = false;
    int n = (int)from.size();
    int p = 0, q = -1;
    for (int i = 1; i < n; ++i)
        if (cross(from[p], from[i]) != 0) {
            q = i;
            break;
        }
    if (q < 0) return M2::identity();
    // f [w_p w_q] = [u_p u_q]
    Int D = cross(from[p], from[q]);
    M2 adj{from[q].y, -from[q].x, -from[p].y, from[p].x};  // adjugate of [w_p w_q]
    Int a = to[p].x * adj.a + to[q].x * adj.c;
    Int b = to[p].x * adj.b + to[q].x * adj.d;
    Int cc = to[p].y * adj.a + to[q].y * adj.c;
    Int d = to[p].y * adj.b + to[q].y * adj.d;
    if (a % D || b % D || cc % D || d % D) return M2::identity();
    M2 f{a / D, b / D, cc / D, d / D};
    if (f.det() != 1) return M2::identity();
    for (int i = 0; i < n; ++i)
        if (!(f.apply(from[i]) == to[i])) return M2::identity();
    *ok = true;
    return f;
}

}  // namespace

PolygonAlignment align_polygons(const Collection& a, const Collection& b, int depth) {
    Polygon target = canonical_polygon(t_polygon(seed_of(b)));
    M2 map_b = canonicalizing_map(t_polygon(seed_of(b)));

    auto finish = [&](const Collection& fin, Trace trace) {
        Polygon pf = t_polygon(seed_of(fin));
        M2 g = canonicalizing_map(pf).inverse_unimodular() * map_b;
        // psi multisets must now agree through g
        std::vector<V2> lhs = seed_of(fin).psi_images();
        std::vector<V2> rhs;
        for (const V2& v : seed_of(b).psi_images()) rhs.push_back(g.apply(v));
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs) throw Error("polygon alignment produced mismatched psi multisets");
        return PolygonAlignment{std::move(trace), g};
    };

    struct Node {
        Collection c;
        Trace trace;
        int depth;
    };
    std::set<Polygon> seen;
    std::deque<Node> queue;
    Polygon p0 = canonical_polygon(t_polygon(seed_of(a)));
    if (p0 == target) return finish(a, {});
    seen.insert(p0);
    queue.push_back(Node{a, {}, 0});
    size_t states = 1;
    while (!queue.empty()) {
        Node cur = std::move(queue.front());
        queue.pop_front();
        if (cur.depth == depth) continue;
        for (RealizedMove& mv : realized_moves(cur.c)) {
            Polygon p = canonical_polygon(t_polygon(seed_of(mv.result)));
            Trace tr = cur.trace;
            tr.insert(tr.end(), mv.steps.begin(), mv.steps.end());
            if (p == target) return finish(mv.result, std::move(tr));
            if (!seen.insert(p).second) continue;
            ++states;
            queue.push_back(Node{std::move(mv.result), std::move(tr), cur.depth + 1});
        }
    }
    throw SearchExhausted("polygon alignment", depth, states);
}

VectorAlignment align_vectors(const Collection& a, const Collection& b) {
    std::vector<V2> w = dual_psi(b);
    Collection cur = a;
    for (int r = 0; r < a.n(); ++r) {
        std::vector<V2> u = dual_psi(cur);
        bool ok = false;
        M2 f = solve_sl2(w, u, &ok);
        if (ok) {
            Trace tr;
            if (r != 0) tr.push_back(TraceOp::rotate(r));
            return VectorAlignment{std::move(tr), f};
        }
        cur = rotate_thread(cur, 1);
    }
    throw Error("psi multisets not aligned: no rotation matches the dual vectors");
}

Trace align_twist(const Collection& a, const Collection& b) {
    std::vector<V2> u = dual_psi(a), w = dual_psi(b);
    bool ok = false;
    M2 f = solve_sl2(w, u, &ok);
    if (!ok) throw Error("duals of the two collections are not SL(2,Z)-related indexwise");
    if (f.a != 1 || f.b != 0 || f.d != 1)
        throw Error("dual relation is not a shear; upstream alignment is inconsistent");
    Int k = f.c;
    if (k == 0) return {};
    Int ell = a.S.k_divisibility();
    if (k % ell != 0) throw Error("twist step not divisible by the canonical divisibility");
    Vec D = vscale(-(k / ell), a.S.degree_generator());
    Trace tr{TraceOp::tensor(D)};
    if (!(dual_psi(tensor_collection(a, D)) == w)) throw Error("twist did not equalize dual vectors");
    return tr;
}

IMat orthogonal_residual(const Collection& a, const Collection& b) {
    if (!(dual_psi(a) == dual_psi(b))) throw Error("psi-duals are not equal indexwise");
    int n = a.n();
    std::vector<KClass> da = dual_collection(a), db = dual_collection(b);
    IMat Fa(n, n), Fb(n, n);
    for (int i = 0; i < n; ++i) {
        Fa.set_col(i, to_coords(a.S, da[i]));
        Fb.set_col(i, to_coords(b.S, db[i]));
    }
    IMat g = mat_mul(Fb, inverse_unimodular(Fa));
    std::string why;
    if (!is_orthogonal_element(a.S, g, &why)) throw Error("residual not in O(Z): " + why);
    return g;
}

Trace realize_reflection(const Collection& c, const KClass& alpha, int depth) {
    const Surface& S = c.S;
    if (euler_chi(S, alpha, alpha) != 2 || !(psi_of(S, alpha) == V2{0, 0}))
        throw Error("realize_reflection requires an affine root");
    IMat refl = reflection_matrix(S, alpha);
    std::vector<KClass> expected;
    for (const KClass& e : c.objs) expected.push_back(from_coords(S, mat_vec(refl, to_coords(S, e))));

    struct Node {
        Collection c;
        Trace trace;
        int depth;
    };
    std::set<Vec> seen;
    std::deque<Node> queue;
    queue.push_back(Node{c, {}, 0});
    seen.insert(collection_key(c));
    size_t states = 1;
    while (!queue.empty()) {
        Node cur = std::move(queue.front());
        queue.pop_front();
        std::vector<KClass> duals = dual_collection(cur.c);
        for (int j = 0; j < cur.c.n(); ++j)
            for (int k = j + 1; k < cur.c.n(); ++k) {
                if (!(psi_of(S, duals[j]) == psi_of(S, duals[k]))) continue;
                KClass diff = duals[j] - duals[k];
                if (!(diff == alpha) && !(diff == -alpha)) continue;
                Collection swapped;
                try {
                    swapped = reorder(cur.c, j, k);
                } catch (const Error&) {
                    continue;  // block not orthogonal; keep searching
                }
                Trace full = cur.trace;
                full.push_back(TraceOp::reorder(j, k));
                Trace back = inverse_trace(cur.trace);
                full.insert(full.end(), back.begin(), back.end());
                Collection result = replay(c, full);
                if (!(result.objs == expected)) continue;
                return full;
            }
        if (cur.depth == depth) continue;
        for (RealizedMove& mv : realized_moves(cur.c)) {
            Vec key = collection_key(mv.result);
            if (!seen.insert(key).second) continue;
            ++states;
            Trace tr = cur.trace;
            tr.insert(tr.end(), mv.steps.begin(), mv.steps.end());
            queue.push_back(Node{std::move(mv.result), std::move(tr), cur.depth + 1});
        }
    }
    throw SearchExhausted("reflection realization", depth, states);
}

Trace realize_weyl(const Collection& c, const IMat& w, int depth) {
    const Surface& S = c.S;
    const WeylGroup& W = weyl_closure(S);
    int idx = W.find(w);
    if (idx < 0) throw Error("element is not in the finite Weyl closure");
    std::vector<int> word = W.words[idx];

    Trace total;
    Collection cur = c;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        Trace tr = realize_reflection(cur, W.gen_roots[*it], depth);
        cur = replay(cur, tr);
        total.insert(total.end(), tr.begin(), tr.end());
    }
    for (int i = 0; i < c.n(); ++i) {
        KClass want = from_coords(S, mat_vec(w, to_coords(S, c.objs[i])));
        if (!(cur.objs[i] == want)) throw Error("Weyl realization mismatch");
    }
    return total;
}

namespace {

std::string m2_str(const M2& g) {
    std::ostringstream os;
    os << "[[" << g.a << "," << g.b << "],[" << g.c << "," << g.d << "]]";
    return os.str();
}

}  // namespace

ConnectResult connect(const Collection& a, const Collection& b, const ConnectLimits& limits) {
    if (a.S != b.S) {
        if (a.S.n() != b.S.n())
            throw Error("surfaces differ: rk K(Z) = " + std::to_string(a.S.n()) + " vs " +
                        std::to_string(b.S.n()));
        // same n: K_Z-perp discriminants separate (P1xP1 vs dP1: 2 vs 8)
        auto disc = [](const Surface& S) { return S.kind == SurfaceKind::P1xP1 ? 2 : 8; };
        throw Error("surfaces differ: discriminant of K_Z-perp = " + std::to_string(disc(a.S)) +
                    " vs " + std::to_string(disc(b.S)));
    }
    VeryStrongCertificate ca = check_very_strong(a);
    VeryStrongCertificate cb = check_very_strong(b);
    Collection an = ca.shifted ? shift_collection(a, 1) : a;
    Collection bn = cb.shifted ? shift_collection(b, 1) : b;

    ConnectResult out;
    Trace& trace = out.trace;
    if (ca.shifted) trace.push_back(TraceOp::shift(1));

    PolygonAlignment pa = align_polygons(an, bn, limits.polygon_depth);
    Collection cur = replay(an, pa.trace);
    trace.insert(trace.end(), pa.trace.begin(), pa.trace.end());
    out.stage_log.push_back("polygon alignment: " + std::to_string(pa.trace.size()) + " ops, g = " + m2_str(pa.g));

    VectorAlignment va = align_vectors(cur, bn);
    cur = replay(cur, va.trace);
    trace.insert(trace.end(), va.trace.begin(), va.trace.end());
    out.stage_log.push_back("vector alignment: " + std::to_string(va.trace.size()) + " ops, f = " + m2_str(va.f));

    Trace tw = align_twist(cur, bn);
    cur = replay(cur, tw);
    trace.insert(trace.end(), tw.begin(), tw.end());
    out.stage_log.push_back("twist: " + std::to_string(tw.size()) + " ops");

    IMat g = orthogonal_residual(cur, bn);
    OrthDecomp od = orthogonal_decompose(a.S, g);
    out.stage_log.push_back("residual in O(Z): Weyl word length " + std::to_string(od.word.size()) +
                            (is_zero(od.D) ? ", no twist" : ", with Pic0 twist"));

    Trace wr = realize_weyl(cur, od.w, limits.weyl_depth);
    cur = replay(cur, wr);
    trace.insert(trace.end(), wr.begin(), wr.end());
    out.stage_log.push_back("Weyl realization: " + std::to_string(wr.size()) + " ops");

    if (!is_zero(od.D)) {
        TraceOp op = TraceOp::tensor(od.D);
        cur = apply_op(cur, op);
        trace.push_back(op);
    }
    if (cb.shifted) {
        trace.push_back(TraceOp::shift(1));
        cur = shift_collection(cur, 1);
    }
    if (!(cur == b)) throw Error("connect pipeline finished without exact class equality");
    // Soundness gate: never return an unverified trace.
    if (!(replay(a, trace) == b)) throw Error("trace replay verification failed");
    out.stage_log.push_back("verified: replay(a, trace) == b exactly");
    return out;
}

}  // namespace helix
