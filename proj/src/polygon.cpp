#include "helix/polygon.hpp"

#include <algorithm>
#include <map>

namespace helix {

Polygon::Polygon(std::vector<V2> vertices) : vs(std::move(vertices)) {
    int n = (int)vs.size();
    if (n < 3) throw Error("polygon needs at least 3 vertices");
    Int area2 = 0;
    for (int i = 0; i < n; ++i) area2 += cross(vs[i], vs[(i + 1) % n]);
    if (area2 <= 0) throw Error("polygon vertices must be counterclockwise");
    for (int i = 0; i < n; ++i) {
        const V2& a = vs[i];
        const V2& b = vs[(i + 1) % n];
        const V2& c = vs[(i + 2) % n];
        if (cross(b - a, c - b) <= 0) throw Error("polygon not strictly convex at a vertex");
        // origin strictly left of every directed edge
        if (cross(b - a, V2{0, 0} - a) <= 0) throw Error("origin not strictly inside polygon");
        if (!is_primitive(a)) throw Error("polygon vertex not primitive");
    }
    for (const PolygonEdge& e : edge_data(*this))
        if (e.length % e.distance != 0) throw Error("edge lattice length not divisible by lattice distance");
}

Polygon Polygon::normalized_start() const {
    int n = (int)vs.size();
    int best = 0;
    for (int i = 1; i < n; ++i)
        if (vs[i] < vs[best]) best = i;
    Polygon r;
    r.vs.reserve(n);
    for (int i = 0; i < n; ++i) r.vs.push_back(vs[(best + i) % n]);
    return r;
}

bool operator==(const Polygon& p, const Polygon& q) { return p.normalized_start().vs == q.normalized_start().vs; }

bool operator<(const Polygon& p, const Polygon& q) {
    auto a = p.normalized_start().vs, b = q.normalized_start().vs;
    return a < b;
}

std::vector<PolygonEdge> edge_data(const Polygon& p) {
    std::vector<PolygonEdge> out;
    int n = (int)p.vs.size();
    for (int i = 0; i < n; ++i) {
        V2 a = p.vs[i], b = p.vs[(i + 1) % n];
        V2 d = b - a;
        Int len = igcd(d.x, d.y);
        V2 prim = {d.x / len, d.y / len};
        // CCW traversal runs along -u for the constraint det(v, u) >= -dist
        V2 u = -prim;
        Int dist = cross(a, prim);
        if (dist <= 0) throw Error("edge distance must be positive (origin inside)");
        out.push_back(PolygonEdge{u, dist, len});
    }
    return out;
}

Polygon t_polygon(const Seed& s) {
    DeltaClass dc = delta_class(s);
    // Constraints det(v, u) >= -c, one per distinct psi direction.
    std::map<V2, Int> constraints;
    for (int i = 0; i < s.n(); ++i) {
        V2 u = s.psi_of(i);
        auto it = constraints.find(u);
        if (it == constraints.end())
            constraints[u] = dc.coeffs[i];
        else if (it->second != dc.coeffs[i])
            throw Error("parallel psi images with distinct delta coefficients");
    }
    std::vector<std::pair<V2, Int>> cs(constraints.begin(), constraints.end());
    int m = (int)cs.size();

    struct RPoint {
        Rat x, y;
        bool operator<(const RPoint& o) const { return x != o.x ? x < o.x : y < o.y; }
        bool operator==(const RPoint& o) const { return x == o.x && y == o.y; }
    };
    std::vector<RPoint> pts;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const V2 &u = cs[i].first, &w = cs[j].first;
            Int den = cross(u, w);
            if (den == 0) continue;
            // solve det(v,u) = -c_u, det(v,w) = -c_w
            //   x u.y - y u.x = -c_u
            //   x w.y - y w.x = -c_w
            Rat x = Rat(cs[i].second * w.x - cs[j].second * u.x, den);
            Rat y = Rat(cs[i].second * w.y - cs[j].second * u.y, den);
            bool ok = true;
            for (int t = 0; t < m && ok; ++t) {
                Rat lhs = x * Rat(cs[t].first.y) - y * Rat(cs[t].first.x);
                if (lhs < Rat(-cs[t].second)) ok = false;
            }
            if (ok) pts.push_back(RPoint{x, y});
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw Error("half-plane intersection degenerate");

    std::vector<V2> verts;
    for (const RPoint& p : pts) {
        if (!p.x.is_integer() || !p.y.is_integer()) throw Error("T-polygon vertex not integral");
        verts.push_back(V2{p.x.num, p.y.num});
    }
    std::sort(verts.begin(), verts.end(), [](const V2& a, const V2& b) {
        int c = angle_cmp(a, b);
        if (c != 0) return c < 0;
        return dot(a, a) < dot(b, b);
    });
    // Drop points interior to hull edges (non-vertices from redundant triples).
    std::vector<V2> hull;
    int k = (int)verts.size();
    for (int i = 0; i < k; ++i) {
        const V2& prev = verts[(i + k - 1) % k];
        const V2& cur = verts[i];
        const V2& next = verts[(i + 1) % k];
        if (cross(cur - prev, next - cur) != 0) hull.push_back(cur);
    }
    return Polygon(hull).normalized_start();
}

Polygon apply(const M2& g, const Polygon& p) {
    if (g.det() != 1) throw Error("polygon transform must be in SL(2,Z)");
    std::vector<V2> vs(p.vs.size());
    for (size_t i = 0; i < p.vs.size(); ++i) vs[i] = g.apply(p.vs[i]);
    return Polygon(vs).normalized_start();
}

namespace {

struct Candidate {
    std::vector<V2> verts;
    M2 map;
};

Candidate candidate_for_edge(const Polygon& p, int start) {
    int n = p.size();
    V2 va = p.vs[start];
    V2 d = p.vs[(start + 1) % n] - va;
    V2 prim = primitive(d);
    // rows r1, r2 with r1 . prim = 1, r2 = (-prim.y, prim.x); then det = 1
    Int a, b;
    igcdext(prim.x, prim.y, a, b);
    M2 g{a, b, -prim.y, prim.x};
    // shear freedom r1 += t r2; pick t putting x(g va) into [0, dist)
    Int dist = -(g.c * va.x + g.d * va.y);
    assert(dist > 0);
    Int x0 = g.a * va.x + g.b * va.y;
    Int t = floordiv(x0, dist);
    g.a -= t * g.c;
    g.b -= t * g.d;
    assert(g.det() == 1);
    Candidate cand;
    cand.map = g;
    cand.verts.reserve(n);
    for (int i = 0; i < n; ++i) cand.verts.push_back(g.apply(p.vs[(start + i) % n]));
    return cand;
}

}  // namespace

M2 canonicalizing_map(const Polygon& p) {
    std::optional<Candidate> best;
    for (int i = 0; i < p.size(); ++i) {
        Candidate c = candidate_for_edge(p, i);
        if (!best || c.verts < best->verts) best = c;
    }
    return best->map;
}

Polygon canonical_polygon(const Polygon& p) { return apply(canonicalizing_map(p), p); }

}  // namespace helix
