#pragma once
// Smooth complete fans in Z^2: completion of a set of rays and
// Hirzebruch-Jung resolution of the non-smooth cones.

#include "helix/geom2d.hpp"

namespace helix {

// Rays counterclockwise, primitive; complete (positively spanning) and
// smooth (consecutive determinants all 1).
struct Fan {
    std::vector<V2> rays;

    Fan() = default;
    explicit Fan(std::vector<V2> r);

    int size() const { return (int)rays.size(); }
    int ray_index(const V2& u) const;  // -1 if absent
};

// Smallest fan produced by the fixed rule: sort, complete gaps >= pi with
// opposite/perpendicular rays, then resolve each cone minimally.
Fan complete_fan(std::vector<V2> vectors);

// Primitive generators strictly between u and u' in the minimal smooth
// subdivision of the cone (u, u'), requires det(u, u') >= 1.
std::vector<V2> hirzebruch_jung(const V2& u, const V2& v);

}  // namespace helix
