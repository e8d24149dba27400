#pragma once
// Search-plus-verify pipeline relating two very strong collections on the
// same surface: polygon alignment by bounded BFS over realized mutations,
// vector alignment by rotation, a line-bundle twist, the orthogonal
// residual, and its Weyl part realized by tilting and reordering.

#include "helix/collection.hpp"
#include "helix/polygon.hpp"
#include "helix/weyl.hpp"

namespace helix {

struct SearchExhausted : Error {
    int depth;
    size_t states;
    SearchExhausted(const std::string& stage, int depth_, size_t states_)
        : Error("search exhausted in " + stage + " (depth " + std::to_string(depth_) + ", " +
                std::to_string(states_) + " states); raise limits"),
          depth(depth_),
          states(states_) {}
};

struct ConnectLimits {
    int polygon_depth = 8;
    int weyl_depth = 8;
};

struct PolygonAlignment {
    Trace trace;
    M2 g;  // psi(seed of replayed a) = g . psi(seed of b) as multisets
};

PolygonAlignment align_polygons(const Collection& a, const Collection& b, int depth);

struct VectorAlignment {
    Trace trace;
    M2 f;  // indexwise psi(F_i of replayed a) = f(psi(F_i of b))
};

VectorAlignment align_vectors(const Collection& a, const Collection& b);

// Pre: psi-duals related indexwise by a shear; emits at most one Tensor.
Trace align_twist(const Collection& a, const Collection& b);

// Pre: psi-duals equal indexwise; the g in O(Z) with g [F_i of a] = [F_i of b].
IMat orthogonal_residual(const Collection& a, const Collection& b);

// Realizes the reflection in an affine root (chi(alpha,alpha) = 2, psi = 0)
// by mutating until the root appears as a parallel dual difference, swapping,
// and unwinding. Resulting classes are r_alpha of the originals.
Trace realize_reflection(const Collection& c, const KClass& alpha, int depth);

// w must lie in the finite Weyl closure; realized reflection by reflection.
Trace realize_weyl(const Collection& c, const IMat& w, int depth);

struct ConnectResult {
    Trace trace;
    std::vector<std::string> stage_log;
};

ConnectResult connect(const Collection& a, const Collection& b, const ConnectLimits& limits = {});

}  // namespace helix
