#pragma once
// Numerical exceptional collections on a del Pezzo surface: the very-strong
// check, dual collections, associated seeds, rotation, goodness, tilting,
// orthogonal reordering, and replayable traces.

#include "helix/qform.hpp"
#include "helix/surface.hpp"

namespace helix {

struct Collection {
    Surface S;
    std::vector<KClass> objs;

    int n() const { return (int)objs.size(); }
    friend bool operator==(const Collection& a, const Collection& b) { return a.S == b.S && a.objs == b.objs; }
    friend bool operator!=(const Collection& a, const Collection& b) { return !(a == b); }
};

struct VeryStrongCertificate {
    bool shifted = false;             // all ranks were negative; slopes below are for the negation
    std::vector<std::pair<Int, Int>> slopes;  // (d_i, r_i) with r_i > 0, exact rationals d/r
};

// Validates exceptionality (chi(E_i,E_i) = 1, chi(E_j,E_i) = 0 for i < j),
// primitivity of (r, d), the global sign normalization, and the slope chain
// mu_1 <= ... <= mu_n <= mu_1 + K^2. Throws on failure.
VeryStrongCertificate check_very_strong(const Collection& c);
bool is_very_strong(const Collection& c);

// [L_F A] = [A] - chi(F, A) [F] and [R_F A] = [A] - chi(A, F) [F]
KClass left_mutate_class(const Surface& S, const KClass& F, const KClass& A);
KClass right_mutate_class(const Surface& S, const KClass& A, const KClass& F);

// Dual classes indexed 1..n like the objects: F_j = L_{E_1}...L_{E_{j-1}} E_j.
std::vector<KClass> dual_collection(const Collection& c);

// The seed {[F_i]} in N = K(Z), columns in collection order (which is a
// valid cyclic order for a very strong collection).
Seed seed_of(const Collection& c);

// k = +1: (E_2..E_n, E_1 x w^-1); k = -1: (E_n x w, E_1..E_{n-1}).
Collection rotate_thread(const Collection& c, int k);

// Dual bracket sign pattern for the left tilt at j (0-based).
bool is_good(const Collection& c, int j);
// Mirrored pattern for the right tilt moving E_1 to position j.
bool is_mirror_good(const Collection& c, int j);

struct GoodThread {
    Collection c;
    int offset;  // rotations applied (0..n-1)
    int j;       // tracked object's index in the rotated thread
};

// Rotates until the thread is good for the tracked object.
GoodThread find_good_thread(const Collection& c, int j);

// (−[F_j], E_1..E_{j-1}, E_{j+1}..E_n); requires is_good(c, j) and j >= 1.
Collection tilt_plus(const Collection& c, int j);
// (E_2..E_j, −[R..R E_1], E_{j+1}..E_n); requires is_mirror_good(c, j).
Collection tilt_minus(const Collection& c, int j);

// Swap objects i < j; everything in positions i..j must have equal slope.
Collection reorder(const Collection& c, int i, int j);

Collection tensor_collection(const Collection& c, const Vec& D);
Collection shift_collection(const Collection& c, int k);

struct TraceOp {
    enum Kind { Rotate, Shift, Reorder, Tensor, TiltPlus, TiltMinus } kind;
    int k = 0;     // Rotate/Shift amount
    int i = 0;     // Reorder first index (0-based)
    int j = 0;     // Reorder second / tilt index (0-based)
    Vec c1;        // Tensor divisor class

    static TraceOp rotate(int k) { return {Rotate, k, 0, 0, {}}; }
    static TraceOp shift(int k) { return {Shift, k, 0, 0, {}}; }
    static TraceOp reorder(int i, int j) { return {Reorder, 0, i, j, {}}; }
    static TraceOp tensor(Vec D) { return {Tensor, 0, 0, 0, std::move(D)}; }
    static TraceOp tilt_plus(int j) { return {TiltPlus, 0, 0, j, {}}; }
    static TraceOp tilt_minus(int j) { return {TiltMinus, 0, 0, j, {}}; }
    friend bool operator==(const TraceOp& a, const TraceOp& b) {
        return a.kind == b.kind && a.k == b.k && a.i == b.i && a.j == b.j && a.c1 == b.c1;
    }
};

using Trace = std::vector<TraceOp>;

struct ReplayError : Error {
    int step;
    ReplayError(int step_, const std::string& what)
        : Error("trace step " + std::to_string(step_) + ": " + what), step(step_) {}
};

Collection apply_op(const Collection& c, const TraceOp& op);
Collection replay(const Collection& c, const Trace& t);
Trace inverse_trace(const Trace& t);

}  // namespace helix
