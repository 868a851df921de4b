#include "doctest.h"
#include "gqs/io.hpp"
#include "test_helpers.hpp"

using namespace gqs;
using gqs::testing::gf9;

TEST_CASE("doubles are formatted with 17 significant digits") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
    CHECK(format_double(-0.5) == "-0.5");
}

TEST_CASE("matrix JSON round-trip") {
    Matrix m(2, 2);
    m << Complex{1.0, 0.0}, Complex{0.0, -1.0 / 3.0}, Complex{0.5, 2.0}, Complex{-1.0, 0.0};
    const std::string text = matrix_to_json(m);
    CHECK(text.rfind("{\"dim\": 2, \"entries\": [[1, 0], ", 0) == 0);
    CHECK(max_abs_diff(matrix_from_json(text), m) == 0.0);
}

TEST_CASE("state JSON round-trip") {
    Vector v(3);
    v << Complex{1.0 / std::sqrt(2.0), 0.0}, Complex{0.0, -1.0 / std::sqrt(2.0)}, Complex{0.0, 0.0};
    CHECK(max_abs_diff(state_from_json(state_to_json(v)), v) == 0.0);
}

TEST_CASE("element and polynomial text format") {
    const auto ctx = gf9();
    CHECK(element_to_text(ctx.from_coeffs({2, 1})) == "2,1");
    CHECK(element_from_text(ctx, "2,1") == ctx.from_coeffs({2, 1}));
    CHECK(element_from_text(ctx, "-1,4") == ctx.from_coeffs({2, 1}));  // residues normalize
    CHECK(element_from_text(ctx, "2") == ctx.scalar(2));               // short form pads zeros
    CHECK_THROWS_AS(element_from_text(ctx, "1,2,3"), ContextMismatch);
    CHECK_THROWS_AS(element_from_text(ctx, "1,x"), ParseError);

    CHECK(poly_to_text(ZpPoly(3, {2, 1, 1})) == "2,1");  // monic leading term dropped
    CHECK(poly_to_text(ZpPoly(3, {0, 1})) == "0");       // y
}

TEST_CASE("system spec parsing") {
    const auto ctx = context_from_spec("p=3,l=2,poly=2,1,h=1,0");
    CHECK(ctx == gf9());
    CHECK(context_from_spec("p=3,ell=2,poly=2,1,h=1,1") == gf9({1, 1}));

    SUBCASE("errors carry positions") {
        CHECK_THROWS_AS(context_from_spec("p=3,l=2,poly=2,1"), ParseError);  // missing h
        CHECK_THROWS_AS(context_from_spec("q=3,l=2,poly=2,1,h=1,0"), ParseError);
        CHECK_THROWS_AS(context_from_spec("3,l=2,poly=2,1,h=1,0"), ParseError);
        try {
            context_from_spec("p=3,l=2,poly=2,x,h=1,0");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.position > 0);
        }
    }
    SUBCASE("domain validation still applies") {
        CHECK_THROWS_AS(context_from_spec("p=3,l=2,poly=1,1,h=1,0"), ReduciblePolynomial);
        CHECK_THROWS_AS(context_from_spec("p=3,l=2,poly=2,1,h=0,0"), ZeroPlanck);
        CHECK_THROWS_AS(context_from_spec("p=9,l=2,poly=2,1,h=1,0"), CompositeModulus);
    }
}
