#pragma once
// Exact integer and rational linear algebra, sized for small lattices
// (everything here is O(n^3) on matrices with n <= ~16).

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace helix {

using Int = long long;
using Vec = std::vector<Int>;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int igcd(Int a, Int b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// g = a*x + b*y with g = gcd(a,b) >= 0
inline Int igcdext(Int a, Int b, Int& x, Int& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return std::abs(a);
    }
    Int x1, y1;
    Int g = igcdext(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline Int floordiv(Int a, Int b) {
    assert(b != 0);
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int gcd_of(const Vec& v) {
    Int g = 0;
    for (Int x : v) g = igcd(g, x);
    return g;
}

inline bool is_zero(const Vec& v) {
    for (Int x : v)
        if (x != 0) return false;
    return true;
}

inline Vec vadd(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vsub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vscale(Int c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec vneg(const Vec& a) { return vscale(-1, a); }

// Exact rational on Int, always normalized with den > 0.
struct Rat {
    Int num = 0, den = 1;

    Rat() = default;
    Rat(Int n) : num(n), den(1) {}
    Rat(Int n, Int d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = igcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw Error("rational division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    Rat operator-() const { return Rat(-num, den); }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
};

using RVec = std::vector<Rat>;

// Dense row-major integer matrix.
struct IMat {
    int rows = 0, cols = 0;
    Vec a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

    Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
    Int at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Vec col(int j) const {
        Vec v(rows);
        for (int i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }
    void set_col(int j, const Vec& v) {
        assert((int)v.size() == rows);
        for (int i = 0; i < rows; ++i) at(i, j) = v[i];
    }

    friend bool operator==(const IMat& x, const IMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const IMat& x, const IMat& y) { return !(x == y); }
    friend bool operator<(const IMat& x, const IMat& y) {
        if (x.rows != y.rows) return x.rows < y.rows;
        if (x.cols != y.cols) return x.cols < y.cols;
        return x.a < y.a;
    }
};

inline IMat mat_mul(const IMat& x, const IMat& y) {
    assert(x.cols == y.rows);
    IMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            Int v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

inline Vec mat_vec(const IMat& m, const Vec& v) {
    assert((int)v.size() == m.cols);
    Vec r(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

inline IMat transpose(const IMat& m) {
    IMat r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

// Determinant by fraction-free Bareiss elimination.
inline Int det(const IMat& m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    if (n == 0) return 1;
    std::vector<Vec> w(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = m.at(i, j);
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(w[k], w[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
        prev = w[k][k];
    }
    return sign * w[n - 1][n - 1];
}

// Solve A x = b exactly over Q (A square nonsingular). Gauss with partial pivot.
inline RVec solve_rational(const IMat& A, const RVec& b) {
    assert(A.rows == A.cols && (int)b.size() == A.rows);
    int n = A.rows;
    std::vector<RVec> w(n, RVec(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = Rat(A.at(i, j));
        w[i][n] = b[i];
    }
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!w[i][k].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) throw Error("singular matrix in solve_rational");
        std::swap(w[k], w[p]);
        for (int i = 0; i < n; ++i) {
            if (i == k || w[i][k].is_zero()) continue;
            Rat f = w[i][k] / w[k][k];
            for (int j = k; j <= n; ++j) w[i][j] = w[i][j] - f * w[k][j];
        }
    }
    RVec x(n);
    for (int i = 0; i < n; ++i) x[i] = w[i][n] / w[i][i];
    return x;
}

inline Vec solve_integer(const IMat& A, const Vec& b) {
    RVec rb(b.size());
    for (size_t i = 0; i < b.size(); ++i) rb[i] = Rat(b[i]);
    RVec rx = solve_rational(A, rb);
    Vec x(rx.size());
    for (size_t i = 0; i < rx.size(); ++i) {
        if (!rx[i].is_integer()) throw Error("integer solve produced non-integral solution");
        x[i] = rx[i].num;
    }
    return x;
}

// Inverse of a unimodular matrix (|det| = 1); result is integral.
inline IMat inverse_unimodular(const IMat& m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    IMat inv(n, n);
    for (int j = 0; j < n; ++j) {
        Vec e(n, 0);
        e[j] = 1;
        inv.set_col(j, solve_integer(m, e));
    }
    return inv;
}

// Basis of {x : A x = 0} over Z via unimodular column reduction.
// The kernel of a map to a free group is saturated, so this basis is too.
inline std::vector<Vec> integer_kernel(const IMat& A) {
    int r = A.rows, c = A.cols;
    IMat W = A;
    IMat V = IMat::identity(c);
    auto colop_sub = [&](int dst, int src, Int q) {  // col dst -= q * col src
        for (int i = 0; i < r; ++i) W.at(i, dst) -= q * W.at(i, src);
        for (int i = 0; i < c; ++i) V.at(i, dst) -= q * V.at(i, src);
    };
    auto colswap = [&](int x, int y) {
        for (int i = 0; i < r; ++i) std::swap(W.at(i, x), W.at(i, y));
        for (int i = 0; i < c; ++i) std::swap(V.at(i, x), V.at(i, y));
    };
    int fixed = 0;
    for (int row = 0; row < r && fixed < c; ++row) {
        while (true) {
            int piv = -1;
            for (int j = fixed; j < c; ++j)
                if (W.at(row, j) != 0 && (piv < 0 || std::abs(W.at(row, j)) < std::abs(W.at(row, piv)))) piv = j;
            if (piv < 0) break;  // row already zero on the free columns
            bool cleared = true;
            for (int j = fixed; j < c; ++j) {
                if (j == piv || W.at(row, j) == 0) continue;
                colop_sub(j, piv, W.at(row, j) / W.at(row, piv));
                if (W.at(row, j) != 0) cleared = false;
            }
            if (cleared) {
                colswap(fixed, piv);
                ++fixed;
                break;
            }
        }
    }
    std::vector<Vec> ker;
    for (int j = fixed; j < c; ++j) {
        Vec v = V.col(j);
        assert(is_zero(mat_vec(A, v)));
        ker.push_back(v);
    }
    return ker;
}

inline Vec primitive_part(Vec v) {
    Int g = gcd_of(v);
    if (g == 0) throw Error("primitive part of zero vector");
    for (Int& x : v) x /= g;
    return v;
}

}  // namespace helix
