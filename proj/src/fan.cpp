#include "helix/fan.hpp"

#include <algorithm>

namespace helix {

Fan::Fan(std::vector<V2> r) : rays(std::move(r)) {
    int m = (int)rays.size();
    if (m < 3) throw Error("complete fan needs at least 3 rays");
    for (int i = 0; i < m; ++i) {
        if (!is_primitive(rays[i])) throw Error("fan ray not primitive");
        if (cross(rays[i], rays[(i + 1) % m]) != 1) throw Error("fan not smooth: consecutive det != 1");
    }
}

int Fan::ray_index(const V2& u) const {
    for (int i = 0; i < size(); ++i)
        if (rays[i] == u) return i;
    return -1;
}

std::vector<V2> hirzebruch_jung(const V2& u, const V2& v) {
    Int d = cross(u, v);
    if (d < 1) throw Error("cone not positively oriented");
    std::vector<V2> out;
    V2 cur = u;
    while (cross(cur, v) > 1) {
        // first ray of the minimal resolution adjacent to cur: the w with
        // det(cur, w) = 1 inside the cone minimizing det(w, v) > 0
        Int a, b;
        igcdext(cur.x, cur.y, a, b);
        V2 w0{-b, a};  // det(cur, w0) = 1
        Int dv = cross(w0, v);
        Int dc = cross(cur, v);
        // w = w0 + t cur shifts det(w, v) by -t * det(cur... det(w0+t*cur, v) = dv + t*dc... pick minimal positive
        Int t = -floordiv(dv - 1, dc);
        V2 w = w0 + t * cur;
        Int dw = cross(w, v);
        assert(dw >= 1 && dw < dc && cross(cur, w) == 1);
        out.push_back(w);
        cur = w;
    }
    return out;
}

Fan complete_fan(std::vector<V2> vectors) {
    std::vector<V2> rays;
    for (const V2& v : vectors) {
        if (v.is_zero()) throw Error("fan input ray is zero");
        V2 p = primitive(v);
        if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
    }
    if (rays.empty()) throw Error("complete_fan needs at least one ray");
    auto sort_ccw = [](std::vector<V2>& rs) {
        std::sort(rs.begin(), rs.end(), [](const V2& a, const V2& b) { return angle_cmp(a, b) < 0; });
    };
    sort_ccw(rays);
    if (rays.size() == 1) rays.push_back(-rays[0]);

    // Close angular gaps of pi or more: opposite ray for a wide gap, a
    // perpendicular for an exact half-turn.
    bool changed = true;
    while (changed) {
        changed = false;
        sort_ccw(rays);
        int m = (int)rays.size();
        for (int i = 0; i < m; ++i) {
            const V2& u = rays[i];
            const V2& w = rays[(i + 1) % m];
            if (m >= 2 && cross(u, w) > 0) continue;
            V2 ins = (w == -u || m == 1) ? V2{-u.y, u.x} : -u;
            if (std::find(rays.begin(), rays.end(), ins) == rays.end()) {
                rays.push_back(ins);
                changed = true;
                break;
            }
            // -u already present but unordered relative to the gap; fall back
            // to the perpendicular.
            ins = V2{-u.y, u.x};
            if (std::find(rays.begin(), rays.end(), ins) == rays.end()) {
                rays.push_back(ins);
                changed = true;
                break;
            }
            throw Error("fan completion failed to close a gap");
        }
    }

    // Resolve each cone.
    std::vector<V2> smooth;
    int m = (int)rays.size();
    for (int i = 0; i < m; ++i) {
        const V2& u = rays[i];
        const V2& w = rays[(i + 1) % m];
        smooth.push_back(u);
        for (const V2& ins : hirzebruch_jung(u, w)) smooth.push_back(ins);
    }
    return Fan(smooth);
}

}  // namespace helix
