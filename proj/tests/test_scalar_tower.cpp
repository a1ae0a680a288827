#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fedosphere/eps_poly.hpp"
#include "test_support.hpp"

using namespace fedosphere;

TEST_CASE("quadratic extension defining relations") {
    BaseElem x3 = BaseElem::x3();
    BaseElem q{BaseRat(x3_square_poly())};
    CHECK(x3 * x3 == q);
    CHECK(x3.inv() * x3 == BaseElem(1));

    FiberScalar R = FiberScalar::root();
    CHECK(R * R == FiberScalar::ss1());
    CHECK(R.inv() * R == FiberScalar(1));
}

TEST_CASE("d_base on the root and the p3 alias") {
    BaseElem x3 = BaseElem::x3();
    BaseElem x1 = BaseElem::x1();
    // d(x3)/dx1 = -x1/x3 by implicit differentiation
    CHECK(d_base(x3, VX1) == -(x1 / x3));
    // hand oracle: p3 = -(x1 p1 + x2 p2)/x3, so dp3/dp1 = -x1/x3
    CHECK(d_base(BaseElem::p3_alias(), VP1) == -(x1 / x3));
    // derivative of the constant x.x
    BaseElem xx = x1 * x1 + BaseElem::x2() * BaseElem::x2() + x3 * x3;
    CHECK(xx == BaseElem(1));
    CHECK(d_base(xx, VX1).is_zero());
}

TEST_CASE("base partial derivatives commute") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) {
        BaseElem f = testgen::rand_base_elem(rng);
        CHECK(d_base(d_base(f, VX1), VX2) == d_base(d_base(f, VX2), VX1));
        CHECK(d_base(d_base(f, VX1), VP2) == d_base(d_base(f, VP2), VX1));
    }
}

TEST_CASE("stereographic points lie on the variety") {
    SpherePoint pt(make_rat(1, 2), make_rat(1, 2), make_rat(1, 1), make_rat(2, 1));
    CHECK(pt.x[0] == CRat(2, 3));
    CHECK(pt.x[1] == CRat(2, 3));
    CHECK(pt.x[2] == CRat(1, 3));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        SpherePoint q = random_point(rng);
        CRat xx = q.x[0] * q.x[0] + q.x[1] * q.x[1] + q.x[2] * q.x[2];
        CRat xp = q.x[0] * q.p[0] + q.x[1] * q.p[1] + q.x[2] * q.p[2];
        CHECK(xx == CRat(1));
        CHECK(xp == CRat(0));
    }
}

TEST_CASE("evaluation respects arithmetic") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        BaseElem f = testgen::rand_base_elem(rng), g = testgen::rand_base_elem(rng);
        for (int attempt = 0; attempt < 16; ++attempt) {
            SpherePoint pt = random_point(rng);
            try {
                CHECK(eval_base_at(f * g, pt) == eval_base_at(f, pt) * eval_base_at(g, pt));
                CHECK(eval_base_at(f + g, pt) == eval_base_at(f, pt) + eval_base_at(g, pt));
                break;
            } catch (const PoleAtPoint&) {
                continue; // fresh point
            }
        }
    }
}

TEST_CASE("ring laws on canonical forms") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 15; ++i) {
        FiberScalar a = testgen::rand_fiber_scalar(rng);
        FiberScalar b = testgen::rand_fiber_scalar(rng);
        FiberScalar c = testgen::rand_fiber_scalar(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("d_fiber chain rules") {
    // d SS/ds1 at x = (0,0,1) reduces to 2 s1
    FiberScalar dss = d_fiber(FiberScalar::ss(), VS1);
    SpherePoint north(make_rat(0, 1), make_rat(0, 1), make_rat(1, 1), make_rat(1, 1));
    FiberScalar at_north = eval_base_point(dss, north);
    FiberScalar expect = FiberScalar::rat(2) * FiberScalar::s_var(VS1);
    CHECK(at_north == expect);

    // d R/ds1 = (d SS/ds1) / (2R)
    FiberScalar lhs = d_fiber(FiberScalar::root(), VS1);
    FiberScalar rhs = dss * (FiberScalar::rat(2) * FiberScalar::root()).inv();
    CHECK(lhs == rhs);

    // jets: d F^(0)/ds1 = F^(1) dSS/ds1
    FiberScalar j = d_fiber(FiberScalar::jet(JF, 0), VS1);
    CHECK(j == FiberScalar::jet(JF, 1) * dss);
}

TEST_CASE("jet order overflow") {
    int J = jet_order_limit();
    FiberScalar top = FiberScalar::jet(JF, J);
    CHECK_THROWS_AS(d_fiber(top, VS1), JetOverflow);
    CHECK_THROWS_AS(FiberScalar::jet(JF, J + 1), JetOverflow);
}

TEST_CASE("division by the zero element") {
    CHECK_THROWS_AS(BaseElem(1) / BaseElem(0), DivisionByZero);
    CHECK_THROWS_AS(FiberScalar(1).inv() * FiberScalar(0).inv(), DivisionByZero);
    CHECK_THROWS_AS(FiberScalar::jet(JF, 0).inv(), DivisionByZero);
}

TEST_CASE("eps truncation ring") {
    using E = EpsPoly<FiberScalar>;
    CHECK_THROWS_AS(E bad(1), TruncationTooSmall);
    E u = E::constant(3, FiberScalar(1));
    E g(3);
    g.c[1] = FiberScalar::ss();
    E v = u + g;      // 1 + eps SS
    E vinv = v.inv(); // 1 - eps SS + eps^2 SS^2
    CHECK((v * vinv - u).is_zero());
    E cube = g * g * g; // eps^3 = 0
    CHECK(cube.is_zero());
}

TEST_CASE("probabilistic zero backend") {
    std::mt19937_64 rng(23);
    FiberScalar zero = FiberScalar::ss() * FiberScalar(0);
    CHECK(probably_zero(zero, rng, 10));
    FiberScalar one(1);
    CHECK_FALSE(probably_zero(one, rng, 10));
    // R^2 - (SS+1) is identically zero in canonical form
    FiberScalar rel = FiberScalar::root() * FiberScalar::root() - FiberScalar::ss1();
    CHECK(rel.is_zero());
}
