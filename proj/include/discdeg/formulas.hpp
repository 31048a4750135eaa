#pragma once

#include <string>
#include <utility>
#include <vector>

#include "discdeg/mpoly.hpp"
#include "discdeg/polytope.hpp"

namespace discdeg {

enum class Verdict { unit, irreducible, square_of_irreducible };

std::string to_string(Verdict v);

// Full degree data of the discriminant of an instance.
struct DegreeReport {
    Int deg = 0;
    std::vector<Int> deg_i;
    Int deg_var = 0;
    long mu = 1;
    bool defective = false;
    Verdict verdict = Verdict::irreducible;
};

// 2 when the characteristic is 2 and n = N-c is even, 1 otherwise.
long mu(const Profile& pr);

// True exactly when all degrees are 1 and c < N+1 (the discriminant locus
// then has codimension > 1 and the discriminant is the unit).
bool is_defective(const Profile& pr);

// Closed-form partial degree in the coefficients of the i-th equation
// (i is 1-based). Exact nonnegative integer; the division by mu must be
// exact or the computation aborts.
Int deg_i_closed(const Profile& pr, long i);

// Closed-form degree in the variables (the GL_{N+1} character exponent).
Int deg_var_closed(const Profile& pr);

// Full report from the closed forms.
DegreeReport closed_form_report(const Profile& pr);

// Irreducibility of the discriminant reduced mod p: the unit for defective
// instances, the square of an irreducible when p = 2 and n even, otherwise
// irreducible.
Verdict mod_p_report(const Profile& pr, long p);

// The deg_1..deg_c and deg_var right-hand sides as explicit polynomials in
// d_1..d_c with integer coefficients (mu = 1 normalization).
std::pair<std::vector<MPoly>, MPoly> symbolic_degrees(long c, long N);

// Literal evaluation of the double sum
//   sum_l sum_{i != l} (1/prod_{l' != l}(d_l - d_{l'}))
//                      (e_i^{N+1} - e_l^{N+1})/(e_i - e_l)
// at pairwise distinct sample values; identically zero.
Rat petitcalcul_identity(long c, long N, const std::vector<Rat>& sample);

}  // namespace discdeg
