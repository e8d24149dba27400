#pragma once
// Lattice polygons with the origin strictly inside: T-polygon construction
// from a q-Painleve seed by exact half-plane intersection, edge lattice
// data, and an SL(2,Z) canonical form.

#include "helix/qform.hpp"

namespace helix {

// Vertices counterclockwise, origin strictly interior. Construction
// validates both T-polygon conditions: primitive vertices with no three
// consecutive collinear, and each edge's lattice length divisible by its
// lattice distance from the origin.
struct Polygon {
    std::vector<V2> vs;

    Polygon() = default;
    explicit Polygon(std::vector<V2> vertices);

    int size() const { return (int)vs.size(); }
    // Rotate storage so the lexicographically least vertex comes first.
    Polygon normalized_start() const;
    friend bool operator==(const Polygon& p, const Polygon& q);
    friend bool operator!=(const Polygon& p, const Polygon& q) { return !(p == q); }
    friend bool operator<(const Polygon& p, const Polygon& q);
};

struct PolygonEdge {
    V2 psi_dir;    // the constraint direction u with the edge on det(v,u) = -dist
    Int distance;  // lattice distance from the edge to the origin
    Int length;    // lattice length of the edge
};

std::vector<PolygonEdge> edge_data(const Polygon& p);

// P_s = intersection of {v : det(v, psi(e_i)) >= -c_i}; requires q-Painleve.
Polygon t_polygon(const Seed& s);

Polygon apply(const M2& g, const Polygon& p);

// Deterministic SL(2,Z) orbit representative. For every directed edge, the
// unique g in SL(2,Z) sending the edge direction to (1,0) with the edge
// source's x-coordinate reduced into [0, distance) is a candidate map; the
// lexicographically least candidate vertex list wins.
Polygon canonical_polygon(const Polygon& p);
// The winning map itself: apply(canonicalizing_map(p), p) == canonical_polygon(p).
M2 canonicalizing_map(const Polygon& p);

}  // namespace helix
