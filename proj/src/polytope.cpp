#include "discdeg/polytope.hpp"

#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "discdeg/symmetric.hpp"

namespace discdeg {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// Enumerates x_0..x_{m-1} with x_i >= lo and sum = total, lexicographically
// ascending; body receives the filled buffer.
void for_each_composition(long m, long total, long lo, std::vector<long long>& buf,
                          const std::function<void()>& body) {
    if (m == 1) {
        if (total >= lo) {
            buf.back() = total;
            body();
        }
        return;
    }
    std::function<void(long, long)> rec = [&](long pos, long rest) {
        if (pos == m - 1) {
            buf[static_cast<size_t>(pos)] = rest;
            body();
            return;
        }
        long hi = rest - lo * (m - 1 - pos);
        for (long v = lo; v <= hi; ++v) {
            buf[static_cast<size_t>(pos)] = v;
            rec(pos + 1, rest - v);
        }
    };
    if (total >= lo * m) rec(0, total);
}

}  // namespace

Profile::Profile(long N, std::vector<long> degrees, long p)
    : N_(N), degrees_(std::move(degrees)), p_(p) {
    const long c = static_cast<long>(degrees_.size());
    if (N_ < 0) throw std::domain_error("Profile: N must be nonnegative");
    if (c < 1 || c > N_ + 1)
        throw std::domain_error("Profile: codimension must satisfy 1 <= c <= N+1 (c=" +
                                std::to_string(c) + ", N=" + std::to_string(N_) + ")");
    for (long d : degrees_)
        if (d < 1) throw std::domain_error("Profile: degrees must be positive");
    if (p_ != 0 && !is_prime(p_))
        throw std::domain_error("Profile: characteristic must be 0 or a prime");
}

std::vector<Rat> Profile::degrees_rat() const {
    return std::vector<Rat>(degrees_.begin(), degrees_.end());
}

std::vector<Rat> Profile::shifted_degrees_rat() const {
    std::vector<Rat> e;
    e.reserve(degrees_.size());
    for (long d : degrees_) e.emplace_back(d - 1);
    return e;
}

long long LatticeVector::level() const {
    return std::accumulate(alpha.begin(), alpha.end(), 0LL);
}

bool LatticeVector::satisfies_lattice_relation(const Profile& pr) const {
    long long lhs = 0;
    for (size_t i = 0; i < alpha.size(); ++i) lhs += pr.degrees()[i] * alpha[i];
    return lhs == std::accumulate(beta.begin(), beta.end(), 0LL);
}

std::vector<Face> enumerate_faces(const Profile& pr) {
    const long c = pr.c(), N = pr.N();
    std::vector<Face> faces;
    faces.reserve(static_cast<size_t>(((1L << c) - 1) * ((1L << (N + 1)) - 1)));
    std::set<std::set<std::pair<long, long>>> vertex_sets;
    for (unsigned long imask = 1; imask < (1UL << c); ++imask) {
        for (unsigned long jmask = 1; jmask < (1UL << (N + 1)); ++jmask) {
            Face f;
            for (long i = 1; i <= c; ++i)
                if (imask & (1UL << (i - 1))) f.I.push_back(i);
            for (long j = 0; j <= N; ++j)
                if (jmask & (1UL << j)) f.J.push_back(j);
            std::set<std::pair<long, long>> verts;
            for (long i : f.I)
                for (long j : f.J) verts.emplace(i, j);
            if (!vertex_sets.insert(verts).second)
                throw invariant_violation(
                    "enumerate_faces: two faces share a vertex set; the I,J face "
                    "description is not faithful for this instance");
            faces.push_back(std::move(f));
        }
    }
    return faces;
}

void for_each_lattice_point(
    const Face& face, const Profile& pr, long level, bool interior,
    const std::function<void(std::span<const long long>, std::span<const long long>)>& fn) {
    if (level < 0) throw std::domain_error("lattice_points: negative level");
    const long c = pr.c(), N = pr.N();
    std::vector<long long> alpha(static_cast<size_t>(c), 0);
    std::vector<long long> beta(static_cast<size_t>(N + 1), 0);
    std::vector<long long> abuf(face.I.size());
    std::vector<long long> bbuf(face.J.size());
    const long lo = interior ? 1 : 0;

    for_each_composition(static_cast<long>(face.I.size()), level, lo, abuf, [&] {
        long long b_total = 0;
        for (size_t t = 0; t < face.I.size(); ++t) {
            alpha[static_cast<size_t>(face.I[t] - 1)] = abuf[t];
            b_total += pr.d(face.I[t]) * abuf[t];
        }
        if (b_total <= static_cast<long long>(std::numeric_limits<long>::max())) {
            for_each_composition(static_cast<long>(face.J.size()), static_cast<long>(b_total),
                                 lo, bbuf, [&] {
                for (size_t t = 0; t < face.J.size(); ++t)
                    beta[static_cast<size_t>(face.J[t])] = bbuf[t];
                fn(alpha, beta);
            });
        } else {
            throw std::domain_error("lattice_points: level out of range");
        }
        for (size_t t = 0; t < face.I.size(); ++t)
            alpha[static_cast<size_t>(face.I[t] - 1)] = 0;
    });
}

std::vector<LatticeVector> lattice_points(const Face& face, const Profile& pr, long level,
                                          bool interior) {
    std::vector<LatticeVector> pts;
    for_each_lattice_point(face, pr, level, interior,
                           [&](std::span<const long long> a, std::span<const long long> b) {
                               pts.push_back(LatticeVector{{a.begin(), a.end()},
                                                           {b.begin(), b.end()}});
                           });
    return pts;
}

Face smallest_containing_face(const LatticeVector& u) {
    Face f;
    bool any = false;
    for (size_t i = 0; i < u.alpha.size(); ++i) {
        if (u.alpha[i] < 0) throw std::domain_error("smallest_containing_face: negative coordinate");
        if (u.alpha[i] > 0) f.I.push_back(static_cast<long>(i + 1)), any = true;
    }
    for (size_t j = 0; j < u.beta.size(); ++j) {
        if (u.beta[j] < 0) throw std::domain_error("smallest_containing_face: negative coordinate");
        if (u.beta[j] > 0) f.J.push_back(static_cast<long>(j)), any = true;
    }
    if (!any) throw std::domain_error("smallest_containing_face: zero vector");
    return f;
}

Rat normalized_volume(const Face& face, const Profile& pr) {
    std::vector<Rat> vals;
    vals.reserve(face.I.size());
    for (long i : face.I) vals.emplace_back(pr.d(i));
    return hk(static_cast<long>(face.J.size()) - 1, vals);
}

std::vector<Rat> moment(const Face& face, const Profile& pr) {
    const long c = pr.c(), N = pr.N();
    std::vector<Rat> m(static_cast<size_t>(c + N + 1), Rat(0));
    std::vector<Rat> vals;
    vals.reserve(face.I.size());
    for (long i : face.I) vals.emplace_back(pr.d(i));

    // deg+1 of the fitted weighted sum; also the exponent in the alpha
    // moment integral
    const long top = face.dim() + 1;

    for (long i : face.I) {
        // P_i(X) = (d_i^top - X^top)/(d_i - X) = sum_b d_i^{top-1-b} X^b,
        // a polynomial even when X specializes to d_i itself
        std::vector<Rat> coeffs(static_cast<size_t>(top), Rat(0));
        for (long b = 0; b < top; ++b) coeffs[static_cast<size_t>(b)] = pow(Rat(pr.d(i)), top - 1 - b);
        Rat comp = divided_difference_sum(UPoly(std::move(coeffs)), vals) / top;
        m[static_cast<size_t>(i - 1)] = comp;
    }
    Rat beta_common = 0;
    for (long i : face.I) beta_common += Rat(pr.d(i)) * m[static_cast<size_t>(i - 1)];
    beta_common /= static_cast<long>(face.J.size());
    for (long j : face.J) m[static_cast<size_t>(c + j)] = beta_common;
    return m;
}

std::vector<UPoly> weighted_sum_fit(const Face& face, const Profile& pr) {
    const long c = pr.c(), N = pr.N();
    const long dim = face.dim();
    std::vector<std::pair<Rat, std::vector<Rat>>> nodes;
    for (long l = 0; l <= dim + 2; ++l) {
        std::vector<long long> sum(static_cast<size_t>(c + N + 1), 0);
        for_each_lattice_point(face, pr, l, /*interior=*/true,
                               [&](std::span<const long long> a, std::span<const long long> b) {
                                   for (long t = 0; t < c; ++t) sum[static_cast<size_t>(t)] += a[static_cast<size_t>(t)];
                                   for (long t = 0; t <= N; ++t)
                                       sum[static_cast<size_t>(c + t)] += b[static_cast<size_t>(t)];
                               });
        std::vector<Rat> v;
        v.reserve(sum.size());
        for (long long s : sum) v.emplace_back(static_cast<long>(s));
        nodes.emplace_back(Rat(l), std::move(v));
    }
    std::vector<UPoly> fit = interpolate_vector(nodes);
    for (const UPoly& f : fit)
        if (f.degree() > dim + 1)
            throw invariant_violation("weighted_sum_fit: interior sum is not polynomial of "
                                      "degree <= dim+1 on the sampled levels");
    return fit;
}

}  // namespace discdeg
