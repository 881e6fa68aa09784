#include <doctest.h>

#include "zonodt/multipoly.hpp"

using namespace zonodt;

namespace {

MultiPoly x(int i) { return MultiPoly::variable(3, i); }

}  // namespace

TEST_CASE("construction and arithmetic") {
    const MultiPoly zero(3);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);

    const MultiPoly f = x(0) + x(1);
    CHECK(f.degree() == 1);
    CHECK(f.is_homogeneous());
    CHECK(f.coefficient({1, 0, 0}) == 1);
    CHECK(f.coefficient({0, 0, 1}) == 0);

    const MultiPoly g = f * f;
    CHECK(g.coefficient({2, 0, 0}) == 1);
    CHECK(g.coefficient({1, 1, 0}) == 2);
    CHECK(g == f.pow(2));
    CHECK((g - g).is_zero());

    const MultiPoly c = MultiPoly::constant(3, mpq_class(1, 2));
    CHECK((c + c).coefficient({0, 0, 0}) == 1);
    CHECK(c.degree() == 0);
    CHECK_FALSE((x(0) + c).is_homogeneous());

    CHECK(f.scaled(0).is_zero());
    CHECK(f.pow(0) == MultiPoly::constant(3, 1));
}

TEST_CASE("linear forms and evaluation") {
    const MultiPoly f = MultiPoly::linear_form({1, -2, 3});
    CHECK(f.evaluate({mpq_class(1), mpq_class(1), mpq_class(1)}) == 2);
    CHECK(f.evaluate({mpq_class(1, 2), mpq_class(0), mpq_class(0)}) == mpq_class(1, 2));

    const MultiPoly h = f.pow(3);
    CHECK(h.evaluate({mpq_class(1), mpq_class(1), mpq_class(1)}) == 8);
}

TEST_CASE("variable relabeling") {
    const MultiPoly f = x(0).pow(2) + x(1).scaled(5);
    const Perm sigma{2, 0, 1};  // 0->2, 1->0, 2->1
    const MultiPoly g = f.permuted(sigma);
    CHECK(g == x(2).pow(2) + x(0).scaled(5));

    // Relabeling twice by sigma and its inverse is the identity.
    CHECK(g.permuted(inverse_perm(sigma)) == f);
}

TEST_CASE("differential operators") {
    // apply_operator(p, g) substitutes d/dx_i for x_i in p and applies to g.
    const MultiPoly g = x(0).pow(3) * x(1);

    SUBCASE("single derivative") {
        const MultiPoly d0 = apply_operator(x(0), g);
        CHECK(d0 == x(0).pow(2) * x(1).scaled(3));
    }
    SUBCASE("mixed second derivative") {
        const MultiPoly d01 = apply_operator(x(0) * x(1), g);
        CHECK(d01 == x(0).pow(2).scaled(3));
    }
    SUBCASE("powers give falling factorials") {
        const MultiPoly d000 = apply_operator(x(0).pow(3), g);
        CHECK(d000 == x(1).scaled(6));
        CHECK(apply_operator(x(0).pow(4), g).is_zero());
    }
    SUBCASE("constant term of the operator scales") {
        const MultiPoly p = MultiPoly::constant(3, 2) + x(1);
        CHECK(apply_operator(p, g) == g.scaled(2) + x(0).pow(3));
    }
    SUBCASE("annihilation detects non-membership") {
        // (d/dx0 + d/dx1) kills x0 - x1 but not x0 + x1.
        const MultiPoly sum_op = x(0) + x(1) + x(2);
        CHECK(apply_operator(sum_op, x(0) - x(1)).is_zero());
        CHECK_FALSE(apply_operator(sum_op, x(0) + x(1)).is_zero());
    }
}

TEST_CASE("directional derivative over a vertex mask") {
    const MultiPoly g = x(0).pow(2) + x(1).pow(2) + x(2).pow(2);
    // mask {0, 2}: (d/dx0 + d/dx2) g = 2 x0 + 2 x2
    CHECK(directional_derivative(g, 0b101) == (x(0) + x(2)).scaled(2));
    CHECK(directional_derivative(MultiPoly::constant(3, 7), 0b111).is_zero());

    // Iterating the full-mask derivative genus+1 times kills any degree-g poly.
    MultiPoly f = (x(0) + x(1)).pow(2) * x(2);
    for (int i = 0; i < 4; ++i) f = directional_derivative(f, 0b111);
    CHECK(f.is_zero());
}
