#include "discdeg/symmetric.hpp"

namespace discdeg {

Rat divided_difference_sum(const UPoly& p, const std::vector<Rat>& vals) {
    if (vals.empty()) throw std::domain_error("divided_difference_sum: empty value list");
    const long c = static_cast<long>(vals.size());
    Rat r = 0;
    for (long m = 0; m <= p.degree(); ++m) {
        Rat a = p.coeff(m);
        if (a != 0) r += a * hk(m - (c - 1), vals);
    }
    return r;
}

Rat alternating_binomial_sum(const UPoly& p, long n, const Rat& x0) {
    if (n < 0) throw std::domain_error("alternating_binomial_sum: negative n");
    Rat r = 0;
    for (long i = 0; i <= n; ++i) {
        Rat term = Rat(binomial(n, i)) * p.eval(x0 + i);
        if (i & 1) r -= term;
        else r += term;
    }
    return r;
}

UPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    std::vector<std::pair<Rat, std::vector<Rat>>> vpoints;
    vpoints.reserve(points.size());
    for (const auto& [x, y] : points) vpoints.emplace_back(x, std::vector<Rat>{y});
    return interpolate_vector(vpoints).at(0);
}

std::vector<UPoly> interpolate_vector(
    const std::vector<std::pair<Rat, std::vector<Rat>>>& points) {
    if (points.empty()) throw std::domain_error("interpolate: no points");
    const size_t n = points.size();
    const size_t dim = points[0].second.size();
    for (const auto& [x, y] : points)
        if (y.size() != dim) throw std::domain_error("interpolate: inconsistent value dimension");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::domain_error("interpolate: repeated abscissa " +
                                        points[i].first.get_str());

    std::vector<UPoly> result(dim);
    for (size_t i = 0; i < n; ++i) {
        // Lagrange basis polynomial for node i
        UPoly basis = UPoly::constant(1);
        Rat denom = 1;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis = basis * UPoly({-points[j].first, 1});
            denom *= points[i].first - points[j].first;
        }
        basis = basis * (Rat(1) / denom);
        for (size_t k = 0; k < dim; ++k)
            result[k] = result[k] + basis * points[i].second[k];
    }
    return result;
}

}  // namespace discdeg
