#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "discdeg/formulas.hpp"
#include "discdeg/sylvester.hpp"

using namespace discdeg;

namespace {

std::vector<size_t> range_group(size_t from, size_t to) {
    std::vector<size_t> g;
    for (size_t i = from; i <= to; ++i) g.push_back(i);
    return g;
}

}  // namespace

TEST_CASE("poly_determinant on a numeric matrix") {
    std::vector<std::string> vars{"x"};
    auto c = [&](long v) { return MPoly::constant(vars, v); };
    // det [[1,2],[3,4]] = -2
    CHECK(poly_determinant({{c(1), c(2)}, {c(3), c(4)}}) == c(-2));
    // det [[x,1],[1,x]] = x^2 - 1
    MPoly x = MPoly::variable(vars, 0);
    CHECK(poly_determinant({{x, c(1)}, {c(1), x}}) == x * x - c(1));
}

TEST_CASE("sylvester_resultant degree-(1,1) determinant case") {
    MPoly res = sylvester_resultant(1, 1);
    // det [[a0,a1],[b0,b1]] = a0*b1 - a1*b0
    std::vector<std::string> vars{"a0", "a1", "b0", "b1"};
    MPoly a0 = MPoly::variable(vars, 0), a1 = MPoly::variable(vars, 1);
    MPoly b0 = MPoly::variable(vars, 2), b1 = MPoly::variable(vars, 3);
    CHECK(res == a0 * b1 - a1 * b0);
    auto degs = partial_degrees(res, {range_group(0, 1), range_group(2, 3)});
    CHECK(degs == std::vector<long>{1, 1});
}

TEST_CASE("sylvester_resultant vanishes on a common root") {
    // (x-2)(x-3) and (x-2)(x+5) share the root 2
    MPoly res = sylvester_resultant(2, 2);
    // a: x^2-5x+6 -> (1,-5,6); b: x^2+3x-10 -> (1,3,-10)
    CHECK(res.eval({1, -5, 6, 1, 3, -10}) == 0);
    // coprime instance: nonzero
    CHECK(res.eval({1, 0, 1, 1, 0, -1}) != 0);
}

TEST_CASE("sylvester partial degrees match the resultant degree formulas") {
    for (long d1 = 1; d1 <= 4; ++d1)
        for (long d2 = 1; d2 <= 4; ++d2) {
            MPoly res = sylvester_resultant(d1, d2);
            auto degs = partial_degrees(
                res, {range_group(0, static_cast<size_t>(d1)),
                      range_group(static_cast<size_t>(d1 + 1), static_cast<size_t>(d1 + d2 + 1))});
            Profile pr(1, {d1, d2}, 0);
            CHECK(Int(degs[0]) == deg_i_closed(pr, 1));
            CHECK(Int(degs[1]) == deg_i_closed(pr, 2));
            CHECK(degs[0] == d2);
            CHECK(degs[1] == d1);
        }
}

TEST_CASE("swapping the forms flips the resultant by the row-swap parity") {
    for (long d1 = 1; d1 <= 3; ++d1)
        for (long d2 = 1; d2 <= 3; ++d2) {
            MPoly r12 = sylvester_resultant(d1, d2);
            MPoly r21 = sylvester_resultant(d2, d1);
            // compare on a numeric specialization with the roles exchanged
            std::vector<Rat> fvals, gvals;
            for (long i = 0; i <= d1; ++i) fvals.emplace_back(2 * i + 1);
            for (long i = 0; i <= d2; ++i) gvals.emplace_back(3 * i - 4);
            std::vector<Rat> p12 = fvals, p21 = gvals;
            p12.insert(p12.end(), gvals.begin(), gvals.end());
            p21.insert(p21.end(), fvals.begin(), fvals.end());
            Rat sign = ((d1 * d2) % 2 == 0) ? 1 : -1;
            CHECK(r12.eval(p12) == sign * r21.eval(p21));
        }
}

TEST_CASE("binary_discriminant d=2 is b^2 - 4ac up to an integer constant") {
    MPoly disc = binary_discriminant(2);
    // Res(2a X + b Y, b X + 2c Y) = 4ac - b^2
    std::vector<std::string> vars{"c0", "c1", "c2"};
    MPoly a = MPoly::variable(vars, 0), b = MPoly::variable(vars, 1),
          c = MPoly::variable(vars, 2);
    CHECK(disc == a * c * Rat(4) - b * b);
    CHECK(disc.total_degree() == 2);
}

TEST_CASE("binary_discriminant total degree is 2(d-1)") {
    for (long d = 2; d <= 4; ++d) {
        MPoly disc = binary_discriminant(d);
        CHECK(disc.total_degree() == 2 * (d - 1));
        // matches the c=1, N=1 degree formula
        CHECK(Int(disc.total_degree()) == deg_i_closed(Profile(1, {d}), 1));
    }
}

TEST_CASE("binary_discriminant vanishes exactly on double roots") {
    MPoly disc = binary_discriminant(3);
    // (x-1)^2 (x+2) = x^3 - 3x + 2: coefficients (1, 0, -3, 2)
    CHECK(disc.eval({1, 0, -3, 2}) == 0);
    // x^3 - x has simple roots
    CHECK(disc.eval({1, 0, -1, 0}) != 0);
}

TEST_CASE("mod-2 reductions of discriminants are perfect squares") {
    CHECK(is_perfect_square_mod2(binary_discriminant(2)));
    CHECK(is_perfect_square_mod2(binary_discriminant(3)));
    CHECK(is_perfect_square_mod2(binary_discriminant(4)));
}

TEST_CASE("cubic discriminant reduces to (ad+bc)^2 mod 2") {
    MPoly disc = binary_discriminant(3);
    std::vector<std::string> vars{"c0", "c1", "c2", "c3"};
    MPoly a = MPoly::variable(vars, 0), b = MPoly::variable(vars, 1),
          c = MPoly::variable(vars, 2), d = MPoly::variable(vars, 3);
    MPoly target = (a * d + b * c) * (a * d + b * c);
    CHECK(disc.reduced_mod2() == target.reduced_mod2());
}

TEST_CASE("is_perfect_square_mod2 rejects odd exponents") {
    std::vector<std::string> vars{"a", "b"};
    MPoly a = MPoly::variable(vars, 0), b = MPoly::variable(vars, 1);
    CHECK_FALSE(is_perfect_square_mod2(a * b));
    CHECK(is_perfect_square_mod2(a * a + b * b * Rat(3)));
    CHECK(is_perfect_square_mod2(a * a * Rat(2)));  // reduces to zero
}

TEST_CASE("partial_degrees basics") {
    std::vector<std::string> vars{"a", "b", "c"};
    MPoly a = MPoly::variable(vars, 0), b = MPoly::variable(vars, 1),
          c = MPoly::variable(vars, 2);
    MPoly p = b * b - a * c * Rat(4);
    CHECK(partial_degrees(p, {{0, 1, 2}}) == std::vector<long>{2});
    CHECK(partial_degrees(MPoly::constant(vars, 1), {{0}, {1, 2}}) ==
          std::vector<long>{0, 0});
    CHECK_THROWS_AS(partial_degrees(MPoly(vars), {{0}}), std::domain_error);
}

TEST_CASE("degree caps are enforced") {
    CHECK_THROWS_AS(sylvester_resultant(0, 2), std::domain_error);
    CHECK_THROWS_AS(sylvester_resultant(5, 2), std::domain_error);
    CHECK_THROWS_AS(binary_discriminant(1), std::domain_error);
    CHECK_THROWS_AS(binary_discriminant(5), std::domain_error);
}
