#pragma once
// Exact plane geometry over Z^2: determinant pairing, angle comparison by
// half-plane + cross product (never floating point), SL(2,Z) helpers.

#include "helix/linalg.hpp"

namespace helix {

struct V2 {
    Int x = 0, y = 0;
    friend bool operator==(const V2& a, const V2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const V2& a, const V2& b) { return !(a == b); }
    friend bool operator<(const V2& a, const V2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
    friend V2 operator+(const V2& a, const V2& b) { return {a.x + b.x, a.y + b.y}; }
    friend V2 operator-(const V2& a, const V2& b) { return {a.x - b.x, a.y - b.y}; }
    V2 operator-() const { return {-x, -y}; }
    friend V2 operator*(Int c, const V2& v) { return {c * v.x, c * v.y}; }
    bool is_zero() const { return x == 0 && y == 0; }
};

inline Int cross(const V2& a, const V2& b) { return a.x * b.y - a.y * b.x; }
inline Int dot(const V2& a, const V2& b) { return a.x * b.x + a.y * b.y; }

inline V2 primitive(const V2& v) {
    if (v.is_zero()) throw Error("primitive direction of zero vector");
    Int g = igcd(v.x, v.y);
    return {v.x / g, v.y / g};
}

inline bool is_primitive(const V2& v) { return !v.is_zero() && igcd(v.x, v.y) == 1; }

// Half-plane index: 0 for angles in [0, pi), 1 for [pi, 2pi). Angle 0 is +x.
inline int angle_half(const V2& v) {
    assert(!v.is_zero());
    return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
}

// Compare angles in [0, 2pi): -1 if a before b, 0 if parallel same ray, +1 after.
inline int angle_cmp(const V2& a, const V2& b) {
    int ha = angle_half(a), hb = angle_half(b);
    if (ha != hb) return ha < hb ? -1 : 1;
    Int c = cross(a, b);
    return c > 0 ? -1 : (c < 0 ? 1 : 0);
}

// True iff some cyclic rotation of the list is nondecreasing in angle,
// i.e. the vectors admit argument determinations with
// theta_1 <= ... <= theta_n <= theta_1 + 2pi.
inline bool cyclically_ordered(const std::vector<V2>& vs) {
    int n = (int)vs.size();
    if (n <= 2) return true;
    int descents = 0;
    for (int i = 0; i < n; ++i)
        if (angle_cmp(vs[i], vs[(i + 1) % n]) > 0) ++descents;
    return descents <= 1;
}

// 2x2 integer matrix [[a, b], [c, d]].
struct M2 {
    Int a = 1, b = 0, c = 0, d = 1;
    static M2 identity() { return {}; }
    V2 apply(const V2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    friend M2 operator*(const M2& x, const M2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    Int det() const { return a * d - b * c; }
    M2 inverse_unimodular() const {
        Int dt = det();
        if (dt != 1 && dt != -1) throw Error("2x2 inverse requires det = +-1");
        return {dt * d, -dt * b, -dt * c, dt * a};
    }
    friend bool operator==(const M2& x, const M2& y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d; }
    friend bool operator!=(const M2& x, const M2& y) { return !(x == y); }
};

// Symplectic transvection w -> w + det(w, v) v; lies in SL(2,Z).
inline M2 transvection(const V2& v) {
    return {1 + v.x * v.y, -v.x * v.x, v.y * v.y, 1 - v.x * v.y};
}

}  // namespace helix
