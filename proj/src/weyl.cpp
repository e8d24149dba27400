#include "helix/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace helix {

namespace {

// Enumerate NS vectors with alpha . K = 0 and alpha^2 = -2 inside the
// coefficient box |a_i| <= 3 (all (-2)-classes of del Pezzo lattices fit;
// confirmed by the Weyl-closure check below).
void enumerate_roots(const Surface& S, Vec& cur, size_t idx, std::vector<Vec>& out) {
    if (idx == cur.size()) {
        if (S.deg(cur) == 0 && S.ns_dot(cur, cur) == -2) out.push_back(cur);
        return;
    }
    for (Int v = -3; v <= 3; ++v) {
        cur[idx] = v;
        enumerate_roots(S, cur, idx + 1, out);
    }
    cur[idx] = 0;
}

}  // namespace

std::vector<KClass> finite_roots(const Surface& S) {
    std::vector<Vec> ns_roots;
    Vec cur(S.rho(), 0);
    enumerate_roots(S, cur, 0, ns_roots);
    std::vector<KClass> out;
    for (const Vec& c : ns_roots) out.push_back(KClass{0, c, 0});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<KClass> affine_roots(const Surface& S, Int height_bound) {
    if (height_bound < 0) throw Error("height bound must be >= 0");
    std::vector<KClass> out;
    for (const KClass& a : finite_roots(S))
        for (Int h = -height_bound; h <= height_bound; ++h) out.push_back(KClass{0, a.c1, h});
    std::sort(out.begin(), out.end());
    return out;
}

KClass reflect(const Surface& S, const KClass& alpha, const KClass& beta) {
    if (euler_chi(S, alpha, alpha) != 2) throw Error("reflection requires chi(alpha, alpha) = 2");
    if (!(psi_of(S, alpha) == V2{0, 0})) throw Error("reflection root must lie in Ker(psi)");
    return beta - euler_chi(S, beta, alpha) * alpha;
}

IMat reflection_matrix(const Surface& S, const KClass& alpha) {
    int n = S.n();
    IMat r(n, n);
    for (int j = 0; j < n; ++j) {
        Vec ej(n, 0);
        ej[j] = 1;
        r.set_col(j, to_coords(S, reflect(S, alpha, from_coords(S, ej))));
    }
    return r;
}

int WeylGroup::find(const IMat& g) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == g) return (int)i;
    return -1;
}

const WeylGroup& weyl_closure(const Surface& S) {
    static std::map<std::pair<int, int>, WeylGroup> cache;
    auto key = std::make_pair((int)S.kind, S.m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    WeylGroup g;
    g.gen_roots = finite_roots(S);
    for (const KClass& a : g.gen_roots) g.gens.push_back(reflection_matrix(S, a));

    std::map<Vec, int> seen;
    IMat id = IMat::identity(S.n());
    g.elements.push_back(id);
    g.words.push_back({});
    seen[id.a] = 0;
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop_front();
        IMat m = g.elements[cur];
        std::vector<int> word = g.words[cur];
        for (size_t gi = 0; gi < g.gens.size(); ++gi) {
            IMat next = mat_mul(g.gens[gi], m);
            auto ins = seen.emplace(next.a, (int)g.elements.size());
            if (!ins.second) continue;
            std::vector<int> w = word;
            w.insert(w.begin(), (int)gi);  // new element = gen * old, generators apply last first
            g.elements.push_back(next);
            g.words.push_back(std::move(w));
            frontier.push_back((int)g.elements.size() - 1);
        }
    }

    // Completeness of the root box: the root set must be closed under W.
    for (const IMat& m : g.elements)
        for (const KClass& a : g.gen_roots) {
            KClass im = from_coords(S, mat_vec(m, to_coords(S, a)));
            if (!std::binary_search(g.gen_roots.begin(), g.gen_roots.end(), im))
                throw Error("root enumeration box too small: Weyl orbit escaped");
        }

    return cache.emplace(key, std::move(g)).first->second;
}

namespace {

// Component classification of a simply-laced Dynkin graph given as an
// adjacency structure: paths are A_k, one degree-3 node with arm lengths
// (1,1,c) is D_{3+c}, (1,2,2)/(1,2,3)/(1,2,4) are E_6/E_7/E_8.
std::string classify_component(const std::vector<std::vector<int>>& adj, const std::vector<int>& nodes) {
    int k = (int)nodes.size();
    if (k == 1) return "A1";
    int deg3 = -1;
    for (int v : nodes) {
        size_t d = adj[v].size();
        if (d > 3) throw Error("Dynkin node of degree > 3");
        if (d == 3) {
            if (deg3 >= 0) throw Error("Dynkin component with two branch nodes");
            deg3 = v;
        }
    }
    if (deg3 < 0) return "A" + std::to_string(k);
    std::vector<int> arms;
    for (int start : adj[deg3]) {
        int len = 1, prev = deg3, cur = start;
        while (true) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] + arms[1] + arms[2] + 1 != k) throw Error("Dynkin arm lengths inconsistent");
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(k);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(k);
    throw Error("unrecognized Dynkin component");
}

}  // namespace

RootLatticeType root_lattice_type(const Surface& S) {
    std::vector<KClass> roots = finite_roots(S);
    RootLatticeType out;
    if (roots.empty()) {
        out.label = "A0";
        if (S.kind == SurfaceKind::BlowupP2 && S.m == 1) {
            // K-perp is rank one; report its generator's square
            IMat gram = S.ns_form();
            Vec k = S.canonical_class();
            IMat deg_row(1, S.rho());
            for (int i = 0; i < S.rho(); ++i) {
                Vec e(S.rho(), 0);
                e[i] = 1;
                deg_row.at(0, i) = S.ns_dot(e, k);
            }
            std::vector<Vec> perp = integer_kernel(deg_row);
            if (perp.size() == 1) out.extra_square = S.ns_dot(perp[0], perp[0]);
            (void)gram;
        }
        return out;
    }

    // Simple roots: positives under a generic functional, not sums of two positives.
    auto positive = [&](const KClass& a) {
        for (Int c : a.c1) {
            if (c > 0) return true;
            if (c < 0) return false;
        }
        return false;
    };
    std::vector<KClass> pos;
    for (const KClass& a : roots)
        if (positive(a)) pos.push_back(a);
    std::set<KClass> pos_set(pos.begin(), pos.end());
    std::vector<KClass> simple;
    for (const KClass& a : pos) {
        bool decomposable = false;
        for (const KClass& b : pos) {
            KClass c = a - b;
            if (pos_set.count(c)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(a);
    }

    int k = (int)simple.size();
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (S.ns_dot(simple[i].c1, simple[j].c1) != 0) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<int> comp(k, -1);
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> nodes;
        std::deque<int> q{i};
        comp[i] = i;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            nodes.push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = i;
                    q.push_back(w);
                }
        }
        labels.push_back(classify_component(adj, nodes));
    }
    std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a > b;  // letters late in the alphabet (E > D > A) first, then higher rank
    });
    std::string label = labels[0];
    for (size_t i = 1; i < labels.size(); ++i) label += "+" + labels[i];
    out.label = label;

    if (S.kind == SurfaceKind::BlowupP2 && S.m == 2) {
        // orthogonal complement of R(Z) inside K-perp
        IMat rows((int)roots.size() + 1, S.rho());
        for (size_t i = 0; i < roots.size(); ++i) {
            Vec gr = mat_vec(S.ns_form(), roots[i].c1);
            for (int j = 0; j < S.rho(); ++j) rows.at((int)i, j) = gr[j];
        }
        Vec gk = mat_vec(S.ns_form(), S.canonical_class());
        for (int j = 0; j < S.rho(); ++j) rows.at((int)roots.size(), j) = gk[j];
        std::vector<Vec> perp = integer_kernel(rows);
        if (perp.size() == 1) out.extra_square = S.ns_dot(perp[0], perp[0]);
    }
    return out;
}

bool is_orthogonal_element(const Surface& S, const IMat& f, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int n = S.n();
    if (f.rows != n || f.cols != n) return fail("matrix has wrong size");
    if (std::abs(det(f)) != 1) return fail("matrix not invertible over Z");
    IMat C = euler_matrix(S);
    if (mat_mul(transpose(f), mat_mul(C, f)) != C) return fail("Euler form not preserved");
    IMat psi = psi_matrix(S);
    if (mat_mul(psi, f) != psi) return fail("rank/degree not preserved");
    return true;
}

OrthDecomp orthogonal_decompose(const Surface& S, const IMat& f) {
    std::string why;
    if (!is_orthogonal_element(S, f, &why)) throw Error("not an orthogonal element: " + why);

    // f([O_Z]) = [O(D)] with D in K_Z-perp (rank and degree are preserved).
    KClass fO = from_coords(S, mat_vec(f, to_coords(S, structure_sheaf(S))));
    Vec D = fO.c1;
    if (S.deg(D) != 0) throw Error("image of [O_Z] has nonzero degree");
    IMat w = mat_mul(tensor_matrix(S, vneg(D)), f);

    const WeylGroup& W = weyl_closure(S);
    int idx = W.find(w);
    if (idx < 0) throw Error("not orthogonal: residual is not in the Weyl closure");
    return OrthDecomp{w, W.words[idx], D};
}

}  // namespace helix
