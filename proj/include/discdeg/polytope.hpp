#pragma once

#include <functional>
#include <span>
#include <vector>

#include "discdeg/rational.hpp"
#include "discdeg/upoly.hpp"

namespace discdeg {

// Problem instance: complete intersections of codimension c and degrees
// d_1..d_c in projective N-space over a field of characteristic p.
class Profile {
  public:
    Profile(long N, std::vector<long> degrees, long p = 0);

    long N() const { return N_; }
    long c() const { return static_cast<long>(degrees_.size()); }
    long p() const { return p_; }
    const std::vector<long>& degrees() const { return degrees_; }
    long d(long i) const { return degrees_.at(static_cast<size_t>(i - 1)); }  // 1-based
    long e(long i) const { return d(i) - 1; }

    long n() const { return N_ - c(); }       // dimension of the intersection
    long k() const { return c() + N_ - 1; }   // dimension of the ambient polytope

    std::vector<Rat> degrees_rat() const;
    std::vector<Rat> shifted_degrees_rat() const;  // e_i = d_i - 1

  private:
    long N_;
    std::vector<long> degrees_;
    long p_;
};

// Face of the Cayley polytope, named by its support sets: I a nonempty
// subset of {1..c}, J a nonempty subset of {0..N}. Combinatorially the face
// is the Cayley polytope of the sub-instance (|I|, |J|-1, (d_i)_{i in I}).
struct Face {
    std::vector<long> I;  // sorted, 1-based equation indices
    std::vector<long> J;  // sorted, 0-based coordinate indices

    long dim() const { return static_cast<long>(I.size() + J.size()) - 2; }
    long codim(const Profile& pr) const { return pr.k() - dim(); }
    bool operator==(const Face& o) const { return I == o.I && J == o.J; }
};

// Integer point of the character lattice, coordinates (alpha_1..alpha_c;
// beta_0..beta_N) subject to sum d_i alpha_i = sum beta_j.
struct LatticeVector {
    std::vector<long long> alpha;
    std::vector<long long> beta;

    long long level() const;  // h(u) = sum alpha_i
    bool satisfies_lattice_relation(const Profile& pr) const;
    bool operator==(const LatticeVector& o) const { return alpha == o.alpha && beta == o.beta; }
};

// All faces (I,J), each exactly once; count (2^c - 1)(2^{N+1} - 1).
// Raises a diagnostic if two distinct (I,J) ever shared a vertex set.
std::vector<Face> enumerate_faces(const Profile& pr);

// Lattice points of the cone over the face at the given level, in
// lexicographic order on (alpha, beta). With interior set, only points
// strictly positive on every coordinate indexed by I and J.
std::vector<LatticeVector> lattice_points(const Face& face, const Profile& pr, long level,
                                          bool interior);

// Streaming form of the same enumeration; the spans alias internal buffers
// valid only for the duration of the callback.
void for_each_lattice_point(
    const Face& face, const Profile& pr, long level, bool interior,
    const std::function<void(std::span<const long long>, std::span<const long long>)>& fn);

// Smallest face of the polytope whose cone contains u: supports of alpha
// and beta.
Face smallest_containing_face(const LatticeVector& u);

// Normalized volume (unit simplex has measure 1): h_{|J|-1}((d_i)_{i in I}).
Rat normalized_volume(const Face& face, const Profile& pr);

// Moment vector int_Gamma u dmu, length c+N+1 (alpha components then beta
// components); zero outside the supports.
std::vector<Rat> moment(const Face& face, const Profile& pr);

// Fits l -> sum of interior lattice points at level l (levels 0..dim+2)
// into one polynomial per ambient coordinate; degrees are at most dim+1 and
// the top coefficient times dim! recovers the moment.
std::vector<UPoly> weighted_sum_fit(const Face& face, const Profile& pr);

}  // namespace discdeg
