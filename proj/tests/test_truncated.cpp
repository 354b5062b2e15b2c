#include "doctest.h"
#include "mfx/truncated.hpp"

using namespace mfx;

namespace {

RingPtr fpxy() { return make_ring({"x", "y"}, field_fp(101)); }

}  // namespace

TEST_CASE("truncated exactness agrees with Groebner on the Koszul complex") {
    auto R = fpxy();
    PresentedModule s{R, {}, PolyMatrix(R, 1, 0)};
    PresentedModule s2{R, {}, PolyMatrix(R, 2, 0)};
    PresentedModule q{R, {}, parse_matrix(R, {{"x", "y"}})};
    ExactSequenceClaim c;
    c.mods = {s, s2, s, q};
    c.maps = {parse_matrix(R, {{"y"}, {"-x"}}), parse_matrix(R, {{"x", "y"}}),
              PolyMatrix::identity(R, 1)};
    CHECK(exact_check(c, true, true));
    CHECK(truncated_exact_check(c, true, true, 8));
    // break the complex: swapped Koszul signs no longer compose to zero
    auto bad = c;
    bad.maps[0] = parse_matrix(R, {{"y"}, {"x"}});
    CHECK(!exact_check(bad, true, true));
    CHECK(!truncated_exact_check(bad, true, true, 8));
}

TEST_CASE("truncated exactness on a short exact sequence of quotients") {
    auto R = fpxy();
    PresentedModule a{R, {parse_poly(R, "x^2")}, parse_matrix(R, {{"x"}})};
    PresentedModule b{R, {parse_poly(R, "x^2")}, parse_matrix(R, {{"x^2"}})};
    ExactSequenceClaim c;
    c.mods = {a, b, a};
    c.maps = {parse_matrix(R, {{"x"}}), PolyMatrix::identity(R, 1)};
    CHECK(exact_check(c, true, true));
    CHECK(truncated_exact_check(c, true, true, 10));
    // identity as the first map is not injective on S/(x)
    auto bad = c;
    bad.maps[0] = PolyMatrix::identity(R, 1);
    CHECK(!exact_check(bad, true, true));
    CHECK(!truncated_exact_check(bad, true, true, 10));
}

TEST_CASE("truncated oracle rejects rationals") {
    auto R = make_ring({"x"}, field_q());
    PresentedModule a{R, {}, PolyMatrix(R, 1, 0)};
    ExactSequenceClaim c;
    c.mods = {a, a};
    c.maps = {PolyMatrix::identity(R, 1)};
    CHECK_THROWS_AS(truncated_exact_check(c, false, false, 4), InputError);
}

TEST_CASE("quotient dimensions: GB lead terms vs Macaulay ranks") {
    auto R = fpxy();
    SUBCASE("complete intersection x^2, y^3") {
        auto gens = std::vector<Polynomial>{parse_poly(R, "x^2"),
                                            parse_poly(R, "y^3")};
        auto a = quotient_dims_from_gb(R, gens, 8);
        auto b = quotient_dims_macaulay(R, gens, 8);
        CHECK(a == b);
        // total dimension of F[x,y]/(x^2,y^3) is 6
        std::size_t tot = 0;
        for (auto d : a) tot += d;
        CHECK(tot == 6);
    }
    SUBCASE("non-monomial homogeneous generators") {
        auto gens = std::vector<Polynomial>{parse_poly(R, "x^2+x y"),
                                            parse_poly(R, "x y^2 - y^3"),
                                            parse_poly(R, "x^3")};
        CHECK(quotient_dims_from_gb(R, gens, 8) ==
              quotient_dims_macaulay(R, gens, 8));
    }
    SUBCASE("zero ideal") {
        auto a = quotient_dims_from_gb(R, {}, 5);
        auto b = quotient_dims_macaulay(R, {}, 5);
        CHECK(a == b);
        CHECK(a[5] == 6);
    }
    SUBCASE("unit ideal has zero dimensions") {
        auto gens = std::vector<Polynomial>{parse_poly(R, "x"),
                                            parse_poly(R, "y")};
        auto a = quotient_dims_from_gb(R, gens, 4);
        CHECK(a == quotient_dims_macaulay(R, gens, 4));
        CHECK(a == std::vector<std::size_t>{1, 0, 0, 0, 0});
    }
    SUBCASE("inhomogeneous generator is rejected") {
        CHECK_THROWS_AS(
            quotient_dims_macaulay(R, {parse_poly(R, "x^2+y")}, 4),
            InputError);
    }
}
