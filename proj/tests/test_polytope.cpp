#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "discdeg/polytope.hpp"
#include "discdeg/symmetric.hpp"
#include "discdeg/verify.hpp"

using namespace discdeg;

namespace {

Face full_face(const Profile& pr) {
    Face f;
    for (long i = 1; i <= pr.c(); ++i) f.I.push_back(i);
    for (long j = 0; j <= pr.N(); ++j) f.J.push_back(j);
    return f;
}

}  // namespace

TEST_CASE("Profile validation and derived quantities") {
    Profile pr(3, {2, 3});
    CHECK(pr.c() == 2);
    CHECK(pr.n() == 1);
    CHECK(pr.k() == 4);
    CHECK(pr.e(1) == 1);
    CHECK(pr.e(2) == 2);
    CHECK_THROWS_AS(Profile(1, {2, 3, 4}), std::domain_error);  // c > N+1
    CHECK_THROWS_AS(Profile(2, {0}), std::domain_error);
    CHECK_THROWS_AS(Profile(2, {2}, 4), std::domain_error);  // 4 not prime
    CHECK_NOTHROW(Profile(2, {2}, 2));
}

TEST_CASE("enumerate_faces counts") {
    CHECK(enumerate_faces(Profile(1, {2})).size() == 3);
    CHECK(enumerate_faces(Profile(1, {1, 2})).size() == 9);
    for (long c : {1L, 2L}) {
        for (long N : {1L, 2L, 3L}) {
            if (c > N + 1) continue;
            Profile pr(N, std::vector<long>(static_cast<size_t>(c), 2));
            auto faces = enumerate_faces(pr);
            CHECK(static_cast<long>(faces.size()) ==
                  ((1L << c) - 1) * ((1L << (N + 1)) - 1));
            long vertices = 0;
            for (const Face& f : faces)
                if (f.I.size() == 1 && f.J.size() == 1) ++vertices;
            CHECK(vertices == c * (N + 1));
        }
    }
}

TEST_CASE("lattice_points of the binary quadric at level 1") {
    Profile pr(1, {2});
    auto pts = lattice_points(full_face(pr), pr, 1, false);
    REQUIRE(pts.size() == 3);
    // lexicographic on (alpha, beta)
    CHECK(pts[0] == LatticeVector{{1}, {0, 2}});
    CHECK(pts[1] == LatticeVector{{1}, {1, 1}});
    CHECK(pts[2] == LatticeVector{{1}, {2, 0}});
    for (const auto& u : pts) CHECK(u.satisfies_lattice_relation(pr));
}

TEST_CASE("lattice_points interior cases") {
    Profile pr(1, {2});
    Face vertex{{1}, {0}};
    auto pts = lattice_points(vertex, pr, 1, true);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == LatticeVector{{1}, {2, 0}});
    // level 0 interior is empty whenever I is nonempty
    CHECK(lattice_points(full_face(pr), pr, 0, true).empty());
    CHECK(lattice_points(vertex, pr, 0, true).empty());
}

TEST_CASE("every enumerated point satisfies the lattice relation") {
    Profile pr(2, {2, 3});
    for (const Face& f : enumerate_faces(pr))
        for (long level : {1L, 2L, 3L})
            for (const auto& u : lattice_points(f, pr, level, false)) {
                CHECK(u.satisfies_lattice_relation(pr));
                CHECK(u.level() == level);
            }
}

TEST_CASE("smallest_containing_face reads supports") {
    Face f1 = smallest_containing_face(LatticeVector{{1}, {1, 1}});
    CHECK(f1.I == std::vector<long>{1});
    CHECK(f1.J == std::vector<long>{0, 1});
    Face f2 = smallest_containing_face(LatticeVector{{1}, {2, 0}});
    CHECK(f2.I == std::vector<long>{1});
    CHECK(f2.J == std::vector<long>{0});
    Face f3 = smallest_containing_face(LatticeVector{{2}, {1, 3}});
    CHECK(f3.J == std::vector<long>{0, 1});
    CHECK_THROWS_AS(smallest_containing_face(LatticeVector{{0}, {0, 0}}), std::domain_error);
}

TEST_CASE("normalized_volume closed forms") {
    // c=1: the simplex of side d has normalized volume d^N
    for (long N : {1L, 2L, 3L})
        for (long d : {1L, 2L, 3L}) {
            Profile pr(N, {d});
            CHECK(normalized_volume(full_face(pr), pr) == pow(Rat(d), N));
        }
    {
        Profile pr(1, {1, 2});
        CHECK(normalized_volume(full_face(pr), pr) == 3);
    }
    for (long d : {1L, 2L, 3L, 4L}) {
        Profile pr(1, {d, d});
        CHECK(normalized_volume(full_face(pr), pr) == 2 * d);
    }
}

TEST_CASE("volume equals dim! times Ehrhart leading coefficient") {
    for (const Profile& pr : grid_profiles(3, 3)) {
        Face f = full_face(pr);
        long dim = f.dim();
        std::vector<std::pair<Rat, Rat>> counts;
        for (long l = 0; l <= dim + 2; ++l)
            counts.emplace_back(Rat(l),
                                Rat(static_cast<long>(lattice_points(f, pr, l, false).size())));
        UPoly ehrhart = interpolate(counts);
        REQUIRE(ehrhart.degree() <= dim);
        CHECK(normalized_volume(f, pr) == ehrhart.coeff(dim) * Rat(factorial(dim)));
    }
}

TEST_CASE("moment worked example c=2,N=1,(1,2)") {
    Profile pr(1, {1, 2});
    auto m = moment(full_face(pr), pr);
    CHECK(m[0] == Rat(4, 3));  // alpha_1
    CHECK(m[1] == Rat(5, 3));  // alpha_2
    CHECK(m[0] + m[1] == 3);   // integrates the constraint sum alpha = 1
    // beta components equal within J
    CHECK(m[2] == m[3]);
}

TEST_CASE("moment structural identities across a grid") {
    for (const Profile& pr : grid_profiles(4, 3)) {
        for (const Face& f : enumerate_faces(pr)) {
            auto m = moment(f, pr);
            Rat alpha_sum = 0, beta_sum = 0, weighted = 0;
            for (long i = 1; i <= pr.c(); ++i) {
                alpha_sum += m[static_cast<size_t>(i - 1)];
                weighted += Rat(pr.d(i)) * m[static_cast<size_t>(i - 1)];
            }
            for (long j = 0; j <= pr.N(); ++j) beta_sum += m[static_cast<size_t>(pr.c() + j)];
            CHECK(alpha_sum == normalized_volume(f, pr));
            CHECK(beta_sum == weighted);
            // c=1 faces: alpha_1 is identically 1 on the polytope
            if (f.I.size() == 1)
                CHECK(m[static_cast<size_t>(f.I[0] - 1)] == normalized_volume(f, pr));
        }
    }
}

TEST_CASE("weighted_sum_fit on the binary quadric") {
    Profile pr(1, {2});
    auto fit = weighted_sum_fit(full_face(pr), pr);
    REQUIRE(fit.size() == 3);
    // interior points at level l are (l; x, 2l-x), 0 < x < 2l: sum is
    // ((2l-1)l; l(2l-1), l(2l-1)); leading coefficients (2; 2, 2)
    for (const auto& f : fit) {
        CHECK(f.degree() == 2);
        CHECK(f.coeff(2) == 2);
    }
    CHECK(fit[0] == UPoly({0, -1, 2}));
}

TEST_CASE("weighted_sum_fit of a vertex face is linear with the vertex as slope") {
    Profile pr(2, {2, 3});
    Face vertex{{2}, {1}};
    auto fit = weighted_sum_fit(vertex, pr);
    CHECK(fit[0].is_zero());
    CHECK(fit[1] == UPoly::monomial(1));          // alpha_2 = l
    CHECK(fit[2].is_zero());
    CHECK(fit[3] == UPoly({0, 3}));               // beta_1 = 3l
    CHECK(fit[4].is_zero());
}

TEST_CASE("fit leading coefficient times dim! equals the moment") {
    for (const Profile& pr : grid_profiles(4, 3)) {
        for (const Face& f : enumerate_faces(pr)) {
            long dim = f.dim();
            auto fit = weighted_sum_fit(f, pr);
            auto m = moment(f, pr);
            Rat dfac = Rat(factorial(dim));
            for (size_t t = 0; t < fit.size(); ++t) {
                CHECK(fit[t].degree() <= dim + 1);
                CHECK(fit[t].coeff(dim + 1) * dfac == m[t]);
            }
        }
    }
}
