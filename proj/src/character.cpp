#include "discdeg/character.hpp"

#include <algorithm>
#include <map>

namespace discdeg {

namespace {

// Per-level enumeration summary: sum of lattice points at one level of the
// full cone, bucketed by the dimension of the smallest containing face.
using DimBuckets = std::vector<std::vector<long long>>;

DimBuckets level_dim_sums(const Profile& pr, long level) {
    const long c = pr.c(), N = pr.N(), k = pr.k();
    const size_t width = static_cast<size_t>(c + N + 1);
    DimBuckets buckets(static_cast<size_t>(k + 1),
                       std::vector<long long>(width, 0));
    Face full;
    for (long i = 1; i <= c; ++i) full.I.push_back(i);
    for (long j = 0; j <= N; ++j) full.J.push_back(j);
    for_each_lattice_point(full, pr, level, /*interior=*/false,
                           [&](std::span<const long long> a, std::span<const long long> b) {
                               long supp = 0;
                               for (long long x : a) supp += (x > 0);
                               for (long long x : b) supp += (x > 0);
                               auto& s = buckets[static_cast<size_t>(supp - 2)];
                               size_t t = 0;
                               for (long long x : a) s[t++] += x;
                               for (long long x : b) s[t++] += x;
                           });
    return buckets;
}

CharacterVector assemble(const Profile& pr, const std::vector<Int>& total) {
    CharacterVector xi;
    const size_t c = static_cast<size_t>(pr.c());
    xi.alpha.assign(total.begin(), total.begin() + static_cast<long>(c));
    xi.beta.assign(total.begin() + static_cast<long>(c), total.end());
    return xi;
}

}  // namespace

CharacterVector xi_closed(const Profile& pr) {
    const size_t width = static_cast<size_t>(pr.c() + pr.N() + 1);
    std::vector<Rat> total(width, Rat(0));
    for (const Face& f : enumerate_faces(pr)) {
        const std::vector<Rat> m = moment(f, pr);
        Rat weight = f.dim() + 1;
        if (f.codim(pr) % 2 != 0) weight = -weight;
        for (size_t t = 0; t < width; ++t) total[t] += weight * m[t];
    }
    std::vector<Int> itotal;
    itotal.reserve(width);
    for (const Rat& q : total) {
        if (!is_integer(q))
            throw invariant_violation("xi_closed: face sum has non-integer component " +
                                      q.get_str());
        itotal.push_back(q.get_num());
    }
    return assemble(pr, itotal);
}

CharacterVector xi_lattice_oracle(const Profile& pr, long l0) {
    if (l0 < 1) throw std::domain_error("xi_lattice_oracle: l0 must be >= 1");
    const long k = pr.k();
    const size_t width = static_cast<size_t>(pr.c() + pr.N() + 1);
    std::vector<Int> total(width, Int(0));
    for (long i = 0; i <= k + 1; ++i) {
        const DimBuckets buckets = level_dim_sums(pr, l0 + i);
        for (long d = 0; d <= k; ++d) {
            Int w = binomial(d + 1, i);
            if (w == 0) continue;
            if ((i + k) % 2 == 0) w = -w;
            const auto& s = buckets[static_cast<size_t>(d)];
            for (size_t t = 0; t < width; ++t) total[t] += w * Int(static_cast<long>(s[t]));
        }
    }
    return assemble(pr, total);
}

CharacterVector xi_lattice_stabilized(const Profile& pr) {
    // Levels are shared between consecutive l0 evaluations; cache their
    // bucketed sums across the whole stabilization run.
    std::map<long, DimBuckets> cache;
    const long k = pr.k();
    const size_t width = static_cast<size_t>(pr.c() + pr.N() + 1);
    auto eval_at = [&](long l0) {
        std::vector<Int> total(width, Int(0));
        for (long i = 0; i <= k + 1; ++i) {
            auto it = cache.find(l0 + i);
            if (it == cache.end())
                it = cache.emplace(l0 + i, level_dim_sums(pr, l0 + i)).first;
            for (long d = 0; d <= k; ++d) {
                Int w = binomial(d + 1, i);
                if (w == 0) continue;
                if ((i + k) % 2 == 0) w = -w;
                const auto& s = it->second[static_cast<size_t>(d)];
                for (size_t t = 0; t < width; ++t) total[t] += w * Int(static_cast<long>(s[t]));
            }
        }
        return assemble(pr, total);
    };

    for (long l0 = k + 1; l0 <= 64; l0 *= 2) {
        CharacterVector a = eval_at(l0);
        CharacterVector b = eval_at(l0 + 1);
        CharacterVector c = eval_at(l0 + 2);
        if (a == b && b == c) return a;
    }
    throw invariant_violation("xi_lattice_stabilized: alternating sum did not stabilize "
                              "within the l0 cap");
}

DegreeReport degrees_from_xi(const CharacterVector& xi, const Profile& pr) {
    for (const Int& b : xi.beta)
        if (b != xi.beta.front())
            throw invariant_violation("degrees_from_xi: beta components are not all equal");
    // lattice relation on the character itself
    Int lhs = 0;
    for (size_t i = 0; i < xi.alpha.size(); ++i) lhs += pr.degrees()[i] * xi.alpha[i];
    Int rhs = 0;
    for (const Int& b : xi.beta) rhs += b;
    if (lhs != rhs)
        throw invariant_violation("degrees_from_xi: character violates the lattice relation");

    const long m = mu(pr);
    DegreeReport r;
    r.mu = m;
    auto divide = [&](const Int& v) {
        if (v % m != 0)
            throw invariant_violation("degrees_from_xi: component " + v.get_str() +
                                      " not divisible by mu=" + std::to_string(m) +
                                      " (this would falsify the degree theorem)");
        return Int(v / m);
    };
    for (const Int& a : xi.alpha) {
        r.deg_i.push_back(divide(a));
        r.deg += r.deg_i.back();
    }
    r.deg_var = divide(xi.beta.front());
    r.defective = r.deg == 0 &&
                  std::all_of(r.deg_i.begin(), r.deg_i.end(), [](const Int& v) { return v == 0; }) &&
                  r.deg_var == 0;
    if (r.defective) r.verdict = Verdict::unit;
    else if (pr.p() == 2 && pr.n() % 2 == 0) r.verdict = Verdict::square_of_irreducible;
    else r.verdict = Verdict::irreducible;
    return r;
}

}  // namespace discdeg
