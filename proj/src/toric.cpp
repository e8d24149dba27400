#include "helix/toric.hpp"

namespace helix {

ToricNS make_toric_ns(const Fan& fan) {
    int m = fan.size();
    IMat inter(m, m);
    for (int i = 0; i < m; ++i) {
        const V2& prev = fan.rays[(i + m - 1) % m];
        const V2& cur = fan.rays[i];
        const V2& next = fan.rays[(i + 1) % m];
        // u_{i-1} + u_{i+1} = a_i u_i, D_i^2 = -a_i
        V2 sum = prev + next;
        if (cross(sum, cur) != 0) throw Error("fan rays violate the smooth-surface relation");
        Int a;
        if (cur.x != 0)
            a = sum.x / cur.x;
        else
            a = sum.y / cur.y;
        if (!(sum == a * cur)) throw Error("non-integral self-intersection in toric surface");
        inter.at(i, i) = -a;
        inter.at(i, (i + 1) % m) = 1;
        inter.at(i, (i + m - 1) % m) = 1;
    }
    return ToricNS{fan, inter};
}

static void check_consistent(const ToricNS& ns, const Vec& alphas) {
    if ((int)alphas.size() != ns.fan.size()) throw Error("alpha vector size mismatch");
    V2 total{0, 0};
    for (int i = 0; i < ns.fan.size(); ++i) total = total + alphas[i] * ns.fan.rays[i];
    if (!total.is_zero()) throw Error("inconsistent alpha vector: no divisor class has these intersections");
}

Int toric_self_intersection(const ToricNS& ns, const Vec& alphas) {
    check_consistent(ns, alphas);
    Int total = 0;
    int m = ns.fan.size();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) total += alphas[i] * alphas[j] * cross(ns.fan.rays[i], ns.fan.rays[j]);
    return total;
}

// Pair two pullback classes given by intersection-number vectors: solve
// inter . x = alpha over Q, then C_a . C_b = x . beta.
static Rat pair_alphas(const ToricNS& ns, const Vec& alpha, const Vec& beta) {
    int m = ns.fan.size();
    // inter is singular (rank m-2); extend with the two relations
    // sum x_i u_i = free, pinned by appending rows to make the solve unique:
    // solve the least-structured way instead: find any x with inter x = alpha
    // by Gaussian elimination allowing free variables set to 0.
    std::vector<RVec> w(m, RVec(m + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) w[i][j] = Rat(ns.inter.at(i, j));
        w[i][m] = Rat(alpha[i]);
    }
    std::vector<int> pivot_col(m, -1);
    int row = 0;
    for (int col = 0; col < m && row < m; ++col) {
        int p = -1;
        for (int i = row; i < m; ++i)
            if (!w[i][col].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(w[row], w[p]);
        for (int i = 0; i < m; ++i) {
            if (i == row || w[i][col].is_zero()) continue;
            Rat f = w[i][col] / w[row][col];
            for (int j = col; j <= m; ++j) w[i][j] = w[i][j] - f * w[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    for (int i = row; i < m; ++i)
        if (!w[i][m].is_zero()) throw Error("alpha vector not in the image of the intersection matrix");
    RVec x(m, Rat(0));
    for (int i = 0; i < row; ++i) x[pivot_col[i]] = w[i][m] / w[i][pivot_col[i]];
    Rat result(0);
    for (int i = 0; i < m; ++i) result = result + x[i] * Rat(beta[i]);
    if (!result.is_integer()) throw Error("non-integral intersection number");
    return result;
}

Int toric_self_intersection_via_matrix(const ToricNS& ns, const Vec& alphas) {
    check_consistent(ns, alphas);
    return pair_alphas(ns, alphas, alphas).num;
}

BlownNS make_blown_ns(const Seed& s) {
    std::vector<V2> dirs = s.psi_images();
    Fan fan = complete_fan(dirs);
    BlownNS b{make_toric_ns(fan), s, {}};
    b.ray_of.resize(s.n());
    for (int i = 0; i < s.n(); ++i) {
        int r = fan.ray_index(s.psi_of(i));
        if (r < 0) throw Error("seed ray missing from completed fan");
        b.ray_of[i] = r;
    }
    return b;
}

NSClass iota(const BlownNS& b, const Vec& a) {
    if (!is_zero(mat_vec(b.seed.amb.psi, a))) throw Error("iota argument must lie in Ker(psi)");
    int m = b.toric.fan.size();
    NSClass c;
    c.alpha.assign(m, 0);
    for (int i = 0; i < b.seed.n(); ++i) c.alpha[b.ray_of[i]] += a[i];
    check_consistent(b.toric, c.alpha);  // holds because a is in Ker(psi)
    c.exc = a;
    return c;
}

Vec iota_inverse(const BlownNS& b, const NSClass& c) {
    // alpha . E_i = a_i: pullbacks pair to zero with exceptionals
    return c.exc;
}

Int ns_dot(const BlownNS& b, const NSClass& x, const NSClass& y) {
    Rat pull = pair_alphas(b.toric, x.alpha, y.alpha);
    Int exc = 0;
    for (size_t i = 0; i < x.exc.size(); ++i) exc += x.exc[i] * y.exc[i];
    return pull.num - exc;
}

OracleReport oracle_check(const Seed& s) {
    BlownNS b = make_blown_ns(s);
    std::vector<Vec> K = kernel_basis(s.amb);
    OracleReport rep;
    for (size_t p = 0; p < K.size(); ++p)
        for (size_t q = p; q < K.size(); ++q) {
            Int lhs = ns_dot(b, iota(b, K[p]), iota(b, K[q]));
            Int rhs = intersection_form(s, K[p], K[q]);
            bool ok = lhs == rhs;
            rep.items.push_back(OracleReport::Item{(int)p, (int)q, lhs, rhs, ok});
            if (!ok) rep.ok = false;
        }
    return rep;
}

}  // namespace helix
