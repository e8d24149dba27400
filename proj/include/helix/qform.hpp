#pragma once
// q-Painleve detection and the delta class. The intersection form on K is
// tested for negative semi-definiteness by exact rational symmetric
// reduction; certificates are returned either way.

#include <optional>

#include "helix/lattice.hpp"

namespace helix {

struct QPCertificate {
    bool q_painleve = false;
    // On success: a nonzero radical vector of the intersection form, in
    // reference coordinates of N.
    std::optional<Vec> radical;
    // On semi-definiteness failure: v with (v, v)_S > 0.
    std::optional<Vec> positive_witness;
    std::string note;
};

QPCertificate is_q_painleve(const Seed& s);

struct DeltaClass {
    Vec delta;   // primitive radical vector, reference coordinates
    Vec coeffs;  // c_i > 0 per storage column: delta = sum c_i e_i
};

// Requires is_q_painleve(s); fails with a diagnostic otherwise.
DeltaClass delta_class(const Seed& s);

}  // namespace helix
