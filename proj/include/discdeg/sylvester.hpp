#pragma once

#include <vector>

#include "discdeg/mpoly.hpp"

namespace discdeg {

// Classical-algebra ground truth at desk scale: resultants and
// discriminants of generic binary forms, expanded symbolically over the
// integers. Degree caps keep the symbolic determinants small.

// Resultant of two generic binary forms of degrees d1 and d2 (coefficient
// variables a0..a_{d1}, b0..b_{d2}), as the expanded (d1+d2)x(d1+d2)
// Sylvester determinant. Requires 1 <= d1, d2 <= 4.
MPoly sylvester_resultant(long d1, long d2);

// An integer multiple of the discriminant of a generic binary form of
// degree d (coefficient variables c0..cd): the resultant of its two partial
// derivatives. Total degree 2(d-1). Requires 2 <= d <= 4.
MPoly binary_discriminant(long d);

// Expanded determinant of a square matrix of polynomials over one ring.
MPoly poly_determinant(const std::vector<std::vector<MPoly>>& m);

// Maximum, over monomials, of the total exponent within each variable
// group. groups partitions (a subset of) the variable indices.
std::vector<long> partial_degrees(const MPoly& poly,
                                  const std::vector<std::vector<size_t>>& groups);

// Whether the mod-2 reduction is a square in F_2[vars]: by Frobenius this
// holds exactly when every surviving monomial has all exponents even.
bool is_perfect_square_mod2(const MPoly& poly);

}  // namespace discdeg
