#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordval/classify.hpp"
#include "ordval/parse.hpp"

using namespace ordval;

namespace {

size_t errPos(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.position;
    }
    FAIL("expected a ParseError");
    return size_t(-1);
}

}  // namespace

TEST_CASE("group expressions") {
    CHECK(parseGroup("Z") == GroupDescriptor::finiteLex({subZ()}));
    CHECK(parseGroup("lex(Q, loc{2})") == GroupDescriptor::finiteLex({subQ(), subLoc({2})}));
    CHECK(parseGroup("omega(prefixprimes)") == GroupDescriptor::omegaLex(PrefixPrimesRule{}));
    CHECK(parseGroup("omega(prefixprimes(3))") ==
          GroupDescriptor::omegaLex(PrefixPrimesRule{3}));
    CHECK(parseGroup("omega(const(Z))") == GroupDescriptor::omegaLex(ConstantRule{subZ()}));
    CHECK(parseGroup("omegaplus1(const(Q), loc{>=3})") ==
          GroupDescriptor::omegaPlusOneLex(ConstantRule{subQ()}, subLocAtLeast(3)));
    CHECK(parseGroup("loc{2,3,5}") == GroupDescriptor::finiteLex({subLoc({2, 3, 5})}));
    CHECK(parseGroup("0").trivial());
    CHECK(parseGroup("  lex( Z ,Q )  ") == GroupDescriptor::finiteLex({subZ(), subQ()}));
    // nested lex flattens
    CHECK(parseGroup("lex(lex(Z, Q), loc{2})") ==
          GroupDescriptor::finiteLex({subZ(), subQ(), subLoc({2})}));
}

TEST_CASE("group expression errors carry positions") {
    CHECK(errPos([] { parseGroup("lex("); }) == 4);
    CHECK(errPos([] { parseGroup("lex(Z"); }) == 5);
    CHECK(errPos([] { parseGroup("loc{4}"); }) == 4);
    CHECK(errPos([] { parseGroup("lex(Z, omega(const(Z)))"); }) == 7);
    CHECK(errPos([] { parseGroup("bogus"); }) == 0);
    CHECK(errPos([] { parseGroup("Z extra"); }) == 2);
    CHECK(errPos([] { parseGroup("omega(prefix)"); }) == 6);
    CHECK(errPos([] { parseGroup("loc{>=4}"); }) == 6);
}

TEST_CASE("element literals") {
    CHECK(parseElement("{1: 1/3, 2: 5}") ==
          hullFrom({{Idx::finite(1), rat(1, 3)}, {Idx::finite(2), rat(5)}}));
    CHECK(parseElement("{}").isZero());
    CHECK(parseElement("{top: -1/2}") == monomial(Idx::topIndex(), rat(-1, 2)));
    CHECK(parseElement("{2: 1, 2: -1}").isZero());  // merged
    CHECK(parseElement(hullStr(parseElement("{3: -7/4, 1: 2}"))) ==
          parseElement("{1: 2, 3: -7/4}"));
    CHECK_THROWS_AS(parseElement("{0: 1}"), ParseError);
    CHECK_THROWS_AS(parseElement("{1: 1/0}"), ParseError);
    CHECK_THROWS_AS(parseElement("{1 1}"), ParseError);
}

TEST_CASE("coefficient fields") {
    CHECK(parseCoeffField("Q") == CoeffField::rationals());
    CHECK(parseCoeffField("quad(2)") == CoeffField::quadratic(2));
    CHECK(parseCoeffField("rc(Q)") == CoeffField::realClosed(CoeffField::rationals()));
    CHECK(parseCoeffField("rc(quad(3))") == CoeffField::realClosed(CoeffField::quadratic(3)));
    CHECK_THROWS_AS(parseCoeffField("quad(4)"), ParseError);
    CHECK_THROWS_AS(parseCoeffField("rc(rc(Q))"), ParseError);
    CHECK_THROWS_AS(parseCoeffField("R"), ParseError);
    // round-trip through the printer
    for (const char* t : {"Q", "quad(2)", "rc(Q)", "rc(quad(5))"})
        CHECK(coeffFieldStr(parseCoeffField(t)) == t);
}

TEST_CASE("series expressions") {
    CoeffField Qf = CoeffField::rationals();
    GroupDescriptor GQ = GroupDescriptor::finiteLex({subQ()});
    GroupDescriptor GZ = GroupDescriptor::finiteLex({subZ()});

    Series s = parseSeries("3*t^({1:1/2}) + 1*t^({1:2})", Qf, GQ);
    REQUIRE(s.terms.size() == 2);
    CHECK(s.terms[0].first == monomial(Idx::finite(1), rat(1, 2)));
    CHECK(s.terms[0].second == QuadExt(rat(3)));

    CHECK(parseSeries("2*t^({1:1}) + -2*t^({1:1})", Qf, GQ).isZero());
    CHECK(parseSeries("0", Qf, GQ).isZero());

    CoeffField k2 = CoeffField::quadratic(2);
    Series q = parseSeries("(1 + 1*sqrt(2))*t^({1:0})", k2, GQ);
    CHECK(q.terms[0].second == QuadExt(2, rat(1), rat(1)));

    CHECK_THROWS_AS(parseSeries("1*t^({1:1/2})", Qf, GZ), ParseError);   // exponent not in Z
    CHECK_THROWS_AS(parseSeries("1*t^({2:1})", Qf, GZ), ParseError);     // index outside Gamma
    CHECK_THROWS_AS(parseSeries("(1*sqrt(2))*t^({1:0})", Qf, GQ), ParseError);  // coeff not in Q
    CHECK_THROWS_AS(parseSeries("1*t^({1:1}) +", Qf, GQ), ParseError);
    // a bare t-term means coefficient 1
    CHECK(seriesStr(parseSeries("t^({1:1})", Qf, GQ)) == "1*t^({1: 1})");

    // round-trip through the canonical printer
    for (const char* t : {"0", "1*t^({})", "1*t^({}) + -1/2*t^({1: 1})"})
        CHECK(seriesStr(parseSeries(t, Qf, GQ)) == t);
    CHECK(seriesStr(parseSeries("(1*sqrt(2))*t^({1: 1})", k2, GQ)) == "(1*sqrt(2))*t^({1: 1})");
}

TEST_CASE("cut expressions") {
    GroupDescriptor GZ = GroupDescriptor::finiteLex({subZ()});
    CutPoint c = parseCut("t^({1:1/2})", GZ);
    CHECK(std::get<GroupCut>(c).g0 == monomial(Idx::finite(1), rat(1, 2)));
    CutPoint r = parseCut("sqrt(2)", GZ);
    CHECK(std::get<ResidueCut>(r).a == quadSqrtD(2));
    CHECK_THROWS_AS(parseCut("t^({1:1})", GZ), ParseError);  // 1 lies inside Z
    CHECK_THROWS_AS(parseCut("3/2", GZ), ParseError);        // rational residue cut
    CHECK(cutStr(parseCut("t^({1: 1/2})", GZ)) == "t^({1: 1/2})");
    CHECK(cutStr(r) == "1*sqrt(2)");
}

TEST_CASE("canonical round-trip over representative descriptors") {
    const char* catalog[] = {
        "0", "Z", "Q", "loc{2}", "loc{3}", "loc{>=3}", "loc{2,5}",
        "lex(Z, Z)", "lex(loc{2}, loc{2})", "lex(Q, loc{2})", "lex(loc{>=3}, Q)",
        "lex(Q, Z)", "lex(Z, Q, loc{2,3})",
        "omega(const(Z))", "omega(const(Q))", "omega(prefixprimes)", "omega(prefixprimes(2))",
        "omegaplus1(const(Q), Z)", "omegaplus1(prefixprimes, loc{>=5})",
    };
    for (const char* t : catalog) {
        GroupDescriptor g = parseGroup(t);
        CHECK(groupStr(g) == t);
        CHECK(parseGroup(groupStr(g)) == g);
    }
}
