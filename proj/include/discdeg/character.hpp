#pragma once

#include <vector>

#include "discdeg/formulas.hpp"
#include "discdeg/polytope.hpp"

namespace discdeg {

// The torus character of the discriminant, as an integer vector in the
// ambient (alpha; beta) coordinates. Its beta components are all equal.
struct CharacterVector {
    std::vector<Int> alpha;
    std::vector<Int> beta;

    bool operator==(const CharacterVector& o) const {
        return alpha == o.alpha && beta == o.beta;
    }
};

// Closed face-sum: sum over all faces of (-1)^codim (dim+1) times the face
// moment. The rational sum must clear denominators; a non-integer total is
// an internal error.
CharacterVector xi_closed(const Profile& pr);

// Independent oracle: the alternating lattice sum
//   sum_{i >= 0} sum_{u at level i+l0} (-1)^{i+k} C(dim(u)+1, i) u
// over all lattice points of the dilated cone, evaluated at a single l0.
// Correct for large l0; use the stabilized wrapper to certify a value.
CharacterVector xi_lattice_oracle(const Profile& pr, long l0);

// Evaluates the oracle at l0, l0+1, l0+2 starting from l0 = k+1 and accepts
// on three-way agreement, doubling l0 (capped at 64) otherwise.
CharacterVector xi_lattice_stabilized(const Profile& pr);

// Degree extraction: deg = sum alpha_i, deg_i = alpha_i, deg_var = the
// common beta value, all divided exactly by mu. Unequal beta components or
// an inexact division abort loudly.
DegreeReport degrees_from_xi(const CharacterVector& xi, const Profile& pr);

}  // namespace discdeg
