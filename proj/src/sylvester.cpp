#include "discdeg/sylvester.hpp"

#include <bit>
#include <cstdint>

namespace discdeg {

namespace {

// Sylvester matrix of two univariate polynomials given by coefficient
// lists (highest degree first), entries in one polynomial ring.
std::vector<std::vector<MPoly>> sylvester_matrix(const std::vector<MPoly>& p,
                                                 const std::vector<MPoly>& q,
                                                 const MPoly& zero) {
    const size_t d1 = p.size() - 1, d2 = q.size() - 1;
    const size_t n = d1 + d2;
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, zero));
    for (size_t r = 0; r < d2; ++r)
        for (size_t t = 0; t <= d1; ++t) m[r][r + t] = p[t];
    for (size_t r = 0; r < d1; ++r)
        for (size_t t = 0; t <= d2; ++t) m[d2 + r][r + t] = q[t];
    return m;
}

}  // namespace

MPoly poly_determinant(const std::vector<std::vector<MPoly>>& m) {
    const size_t n = m.size();
    if (n == 0 || n > 12) throw std::domain_error("poly_determinant: unsupported size");
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("poly_determinant: matrix not square");
    const auto& vars = m[0][0].vars();
    // minors[S]: determinant of rows 0..popcount(S)-1 restricted to columns S
    std::vector<MPoly> minors(size_t(1) << n, MPoly(vars));
    minors[0] = MPoly::constant(vars, 1);
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        const size_t r = static_cast<size_t>(std::popcount(mask)) - 1;
        MPoly acc(vars);
        long pos = 0;
        for (size_t col = 0; col < n; ++col) {
            if (!(mask & (1u << col))) continue;
            const MPoly& sub = minors[mask & ~(1u << col)];
            if (!sub.is_zero() && !m[r][col].is_zero()) {
                MPoly term = m[r][col] * sub;
                acc = ((r + static_cast<size_t>(pos)) % 2 == 0) ? acc + term : acc - term;
            }
            ++pos;
        }
        minors[mask] = std::move(acc);
    }
    return minors[(1u << n) - 1];
}

MPoly sylvester_resultant(long d1, long d2) {
    if (d1 < 1 || d1 > 4 || d2 < 1 || d2 > 4)
        throw std::domain_error("sylvester_resultant: degrees must be in 1..4");
    std::vector<std::string> vars;
    for (long i = 0; i <= d1; ++i) vars.push_back("a" + std::to_string(i));
    for (long i = 0; i <= d2; ++i) vars.push_back("b" + std::to_string(i));
    std::vector<MPoly> p, q;
    for (long i = 0; i <= d1; ++i) p.push_back(MPoly::variable(vars, static_cast<size_t>(i)));
    for (long i = 0; i <= d2; ++i)
        q.push_back(MPoly::variable(vars, static_cast<size_t>(d1 + 1 + i)));
    return poly_determinant(sylvester_matrix(p, q, MPoly(vars)));
}

MPoly binary_discriminant(long d) {
    if (d < 2 || d > 4) throw std::domain_error("binary_discriminant: degree must be in 2..4");
    std::vector<std::string> vars;
    for (long i = 0; i <= d; ++i) vars.push_back("c" + std::to_string(i));
    // generic form sum_i c_i X0^{d-i} X1^i; both partials have degree d-1
    std::vector<MPoly> fx0, fx1;
    for (long i = 0; i < d; ++i)
        fx0.push_back(MPoly::variable(vars, static_cast<size_t>(i)) * Rat(d - i));
    for (long i = 1; i <= d; ++i)
        fx1.push_back(MPoly::variable(vars, static_cast<size_t>(i)) * Rat(i));
    return poly_determinant(sylvester_matrix(fx0, fx1, MPoly(vars)));
}

std::vector<long> partial_degrees(const MPoly& poly,
                                  const std::vector<std::vector<size_t>>& groups) {
    if (poly.is_zero()) throw std::domain_error("partial_degrees: zero polynomial");
    std::vector<long> degs;
    degs.reserve(groups.size());
    for (const auto& g : groups) degs.push_back(poly.degree_in(g));
    return degs;
}

bool is_perfect_square_mod2(const MPoly& poly) {
    const MPoly reduced = poly.reduced_mod2();
    for (const auto& [e, c] : reduced.terms())
        for (unsigned x : e)
            if (x % 2 != 0) return false;
    return true;
}

}  // namespace discdeg
