#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordval/numeric.hpp"

using namespace ordval;

TEST_CASE("rational helpers") {
    CHECK(rat(6, 4) == rat(3, 2));
    CHECK(rat(-6, 4) == rat(-3, 2));
    CHECK(rat(6, -4) == rat(-3, 2));
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);

    CHECK(sgn(rat(0)) == 0);
    CHECK(sgn(rat(-7, 3)) == -1);

    CHECK(floorRat(rat(7, 2)) == 3);
    CHECK(floorRat(rat(-7, 2)) == -4);
    CHECK(floorRat(rat(4)) == 4);

    CHECK(ratSqrt(rat(9, 4)) == rat(3, 2));
    CHECK(ratSqrt(rat(0)) == rat(0));
    CHECK(!ratSqrt(rat(2)).has_value());
    CHECK(!ratSqrt(rat(-1)).has_value());

    CHECK(ratStr(rat(3, 2)) == "3/2");
    CHECK(ratStr(rat(-5)) == "-5");
    CHECK(parseRat("3/2") == rat(3, 2));
    CHECK(parseRat("-5") == rat(-5));
    CHECK(parseRat("+5") == rat(5));
    CHECK_THROWS_AS(parseRat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parseRat("abc"), std::invalid_argument);
}

TEST_CASE("quadratic extension arithmetic and sign") {
    QuadExt s2 = quadSqrtD(2);
    QuadExt one{rat(1)};

    // (1 + sqrt(2))(1 - sqrt(2)) = -1
    QuadExt a = qextArith(one, s2, ArithOp::Add);
    QuadExt b = qextArith(one, s2, ArithOp::Sub);
    QuadExt prod = qextArith(a, b, ArithOp::Mul);
    CHECK(prod.isRational());
    CHECK(prod.u == rat(-1));

    // 1 / (1 + sqrt(2)) = -1 + sqrt(2)
    QuadExt inv = qextArith(one, a, ArithOp::Div);
    CHECK(inv == QuadExt(2, rat(-1), rat(1)));

    // sign of 7/5 - sqrt(2) is negative, 3/2 - sqrt(2) is positive
    CHECK(qextSign(QuadExt(2, rat(7, 5), rat(-1))) == -1);
    CHECK(qextSign(QuadExt(2, rat(3, 2), rat(-1))) == 1);
    CHECK(qextSign(QuadExt()) == 0);
    CHECK(qextCmp(s2, QuadExt(rat(3, 2))) < 0);
    CHECK(qextCmp(s2, QuadExt(rat(7, 5))) > 0);

    CHECK_THROWS_AS(qextArith(quadSqrtD(2), quadSqrtD(3), ArithOp::Add), std::invalid_argument);
    CHECK_THROWS_AS(qextArith(one, QuadExt(), ArithOp::Div), std::domain_error);
}

TEST_CASE("squareness in Q(sqrt(d))") {
    // 3 + 2*sqrt(2) = (1 + sqrt(2))^2
    auto r = qextSqrtIfSquare(QuadExt(2, rat(3), rat(2)));
    REQUIRE(r.has_value());
    CHECK(*r == QuadExt(2, rat(1), rat(1)));

    // 2 is a square in Q(sqrt(2)) but not in Q
    auto r2 = qextSqrtIfSquare(QuadExt(rat(2)), 2);
    REQUIRE(r2.has_value());
    CHECK(*r2 == quadSqrtD(2));
    CHECK(!qextSqrtIfSquare(QuadExt(rat(2)), 0).has_value());

    // 9/4 is a square everywhere
    auto r3 = qextSqrtIfSquare(QuadExt(rat(9, 4)), 2);
    REQUIRE(r3.has_value());
    CHECK(*r3 == QuadExt(rat(3, 2)));

    // 1 + sqrt(2) is not a square in Q(sqrt(2)): u^2 - v^2 d = -1
    CHECK(!qextSqrtIfSquare(QuadExt(2, rat(1), rat(1))).has_value());
    // negatives are never squares
    CHECK(!qextSqrtIfSquare(QuadExt(rat(-4)), 2).has_value());
    CHECK(!qextSqrtIfSquare(QuadExt(2, rat(-3), rat(-2))).has_value());

    // round-trip property on a small grid: (u + v sqrt 2)^2 has a root
    for (long un = -3; un <= 3; ++un)
        for (long vn = -3; vn <= 3; ++vn) {
            QuadExt x(2, rat(un, 2), rat(vn, 3));
            if (x.v == 0) x = QuadExt(x.u);
            QuadExt sq = qextArith(x, x, ArithOp::Mul);
            auto root = qextSqrtIfSquare(sq, 2);
            REQUIRE(root.has_value());
            CHECK(qextArith(*root, *root, ArithOp::Mul) == sq);
            CHECK(qextSign(*root) >= 0);
        }
}

TEST_CASE("rational strictly inside an interval") {
    // midpoint of integer bracket: (0, 1) -> 1/2
    CHECK(rationalInInterval(QuadExt(rat(0)), QuadExt(rat(1))) == rat(1, 2));
    // interval around sqrt(2): (sqrt(2) - 1/2, sqrt(2))
    QuadExt s2 = quadSqrtD(2);
    QuadExt lo = qextArith(s2, QuadExt(rat(1, 2)), ArithOp::Sub);
    Rat mid = rationalInInterval(lo, s2);
    CHECK(qextCmp(QuadExt(mid), lo) > 0);
    CHECK(qextCmp(QuadExt(mid), s2) < 0);
    CHECK_THROWS_AS(rationalInInterval(s2, s2), std::domain_error);
    CHECK_THROWS_AS(rationalInInterval(QuadExt(rat(1)), QuadExt(rat(0))), std::domain_error);
}

TEST_CASE("quadratic literals round-trip") {
    QuadExt vals[] = {QuadExt(rat(0)), QuadExt(rat(-3, 2)), quadSqrtD(2),
                      QuadExt(2, rat(1), rat(-1, 2)), QuadExt(3, rat(-2, 5), rat(7))};
    for (const QuadExt& x : vals) CHECK(parseQuadExt(qextStr(x)) == x);
    CHECK(parseQuadExt("1 + 1*sqrt(2)") == QuadExt(2, rat(1), rat(1)));
    CHECK(parseQuadExt("sqrt(2)") == quadSqrtD(2));
    CHECK(parseQuadExt("-1/2*sqrt(3)") == QuadExt(3, rat(0), rat(-1, 2)));
    CHECK_THROWS_AS(parseQuadExt("sqrt(two)"), std::invalid_argument);
}
