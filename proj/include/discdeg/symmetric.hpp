#pragma once

#include <utility>
#include <vector>

#include "discdeg/rational.hpp"
#include "discdeg/upoly.hpp"

namespace discdeg {

// Complete homogeneous symmetric polynomial h_k evaluated at vals.
// h_k = 0 for k < 0 and h_0 = 1. Generic over the coefficient ring so the
// same code serves numeric and symbolic evaluation.
template <class T>
T complete_homogeneous(long k, const std::vector<T>& vals, const T& zero, const T& one) {
    if (vals.empty()) throw std::domain_error("complete_homogeneous: empty value list");
    if (k < 0) return zero;
    // h[j] accumulates h_j of the prefix processed so far
    std::vector<T> h(static_cast<size_t>(k) + 1, zero);
    h[0] = one;
    for (const T& v : vals)
        for (long j = 1; j <= k; ++j) h[j] += v * h[j - 1];
    return h[static_cast<size_t>(k)];
}

inline Rat hk(long k, const std::vector<Rat>& vals) {
    return complete_homogeneous<Rat>(k, vals, 0, 1);
}

// R = sum_l P(d_l) / prod_{l' != l} (d_l - d_{l'}), computed through the
// h_k rewriting so repeated values never divide by zero. For a single value
// the empty product is 1 and R = P(d_1).
Rat divided_difference_sum(const UPoly& p, const std::vector<Rat>& vals);

// sum_{i=0..n} (-1)^i C(n,i) P(x0 + i). Equals (-1)^n n! a_n when
// deg P = n with leading coefficient a_n, and 0 when deg P < n.
Rat alternating_binomial_sum(const UPoly& p, long n, const Rat& x0);

// Lagrange interpolation through points with pairwise distinct abscissae;
// result has degree < number of points.
UPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// Componentwise variant for vector-valued ordinates. All value vectors must
// have the same length.
std::vector<UPoly> interpolate_vector(
    const std::vector<std::pair<Rat, std::vector<Rat>>>& points);

}  // namespace discdeg
