#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordval/groups.hpp"

using namespace ordval;

namespace {

const RationalSubgroup A = subLoc({2});  // dyadic rationals

GroupDescriptor groupZZ() { return GroupDescriptor::finiteLex({subZ(), subZ()}); }
GroupDescriptor groupAA() { return GroupDescriptor::finiteLex({A, A}); }
GroupDescriptor groupQA() { return GroupDescriptor::finiteLex({subQ(), A}); }
GroupDescriptor groupPP() { return GroupDescriptor::omegaLex(PrefixPrimesRule{}); }

HullElement h(std::vector<std::pair<long, Rat>> terms) {
    std::vector<std::pair<Idx, Rat>> t;
    for (auto& [n, c] : terms) t.emplace_back(Idx::finite(n), c);
    return hullFrom(std::move(t));
}

}  // namespace

TEST_CASE("index order and components") {
    CHECK(Idx::finite(1) < Idx::finite(2));
    CHECK(Idx::finite(100) < Idx::topIndex());
    CHECK(Idx::topIndex() == Idx::topIndex());

    GroupDescriptor G = groupPP();
    CHECK(G.component(Idx::finite(1)) == subLoc({3}));
    CHECK(G.component(Idx::finite(3)) == subLoc({3, 5, 7}));
    CHECK_THROWS_AS(G.component(Idx::finite(0)), std::out_of_range);
    CHECK_THROWS_AS(G.component(Idx::topIndex()), std::out_of_range);

    GroupDescriptor H = GroupDescriptor::omegaPlusOneLex(ConstantRule{subZ()}, subQ());
    CHECK(H.component(Idx::topIndex()) == subQ());
    CHECK(H.lastIndex() == Idx::topIndex());
    CHECK(groupZZ().lastIndex() == Idx::finite(2));
    CHECK(!groupPP().hasLastIndex());
}

TEST_CASE("prime sets and rational subgroups") {
    CHECK(isPrime(2));
    CHECK(isPrime(97));
    CHECK(!isPrime(1));
    CHECK(!isPrime(91));
    CHECK(nthOddPrime(1) == 3);
    CHECK(nthOddPrime(4) == 11);

    CHECK(A.contains(rat(5, 8)));
    CHECK(!A.contains(rat(1, 3)));
    CHECK(A.denselyOrdered());
    CHECK(A.pDivisible(2));
    CHECK(!A.pDivisible(3));
    CHECK(!A.divisible());
    CHECK(subQ().divisible());
    CHECK(subZ().isZ());

    RationalSubgroup B = subLocAtLeast(3);
    CHECK(B.contains(rat(1, 15)));
    CHECK(!B.contains(rat(1, 6)));
    CHECK(!B.divisible());
    CHECK(subLocAtLeast(2).divisible());

    CHECK_THROWS_AS(subLoc({4}), std::invalid_argument);
    CHECK_THROWS_AS(subLoc({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(subLocAtLeast(6), std::invalid_argument);
}

TEST_CASE("hull arithmetic, order, valuation") {
    HullElement x = h({{1, rat(1, 2)}, {2, rat(-1)}});
    HullElement y = h({{1, rat(-1, 2)}, {3, rat(2)}});
    CHECK(hullAdd(x, y) == h({{2, rat(-1)}, {3, rat(2)}}));
    CHECK(hullSub(x, x).isZero());
    CHECK(hullScale(x, rat(2)) == h({{1, rat(1)}, {2, rat(-2)}}));
    CHECK(hullScale(x, rat(0)).isZero());

    // lexicographic: smaller index dominates
    CHECK(hullCmp(h({{1, rat(1)}}), h({{2, rat(1000)}})) > 0);
    CHECK(hullCmp(h({{2, rat(-1)}}), HullElement{}) < 0);
    CHECK(hullSign(h({{1, rat(-1, 7)}, {2, rat(5)}})) == -1);

    CHECK(!natValuation(HullElement{}).has_value());
    CHECK(natValuation(x) == Idx::finite(1));
    CHECK(natValuation(h({{2, rat(3)}})) == Idx::finite(2));

    CHECK(hullStr(h({{1, rat(1, 3)}, {2, rat(5)}})) == "{1: 1/3, 2: 5}");
}

TEST_CASE("group membership and division") {
    CHECK(gMember(h({{1, rat(1, 2)}, {2, rat(3, 4)}}), groupAA()));
    CHECK(!gMember(h({{1, rat(1, 3)}}), groupAA()));
    CHECK_THROWS_AS(gMember(h({{3, rat(1)}}), groupAA()), std::out_of_range);
    CHECK_THROWS_AS(GroupElement(groupZZ(), h({{1, rat(1, 2)}})), std::invalid_argument);

    GroupElement g(groupAA(), h({{1, rat(1)}, {2, rat(1, 2)}}));
    auto half = divideBy(g, 2);
    REQUIRE(half.has_value());
    CHECK(half->value == h({{1, rat(1, 2)}, {2, rat(1, 4)}}));
    CHECK(!divideBy(g, 3).has_value());
    CHECK_THROWS_AS(divideBy(g, 0), std::domain_error);
}

TEST_CASE("order-type and density predicates on the named groups") {
    // Z + Z: discretely ordered, regular, closed
    CHECK(!isDenselyOrdered(groupZZ()));
    CHECK(isDiscretelyOrdered(groupZZ()));
    CHECK(!isRegular(groupZZ()));
    CHECK(isClosedInHull(groupZZ()));

    // A + A: densely ordered, not regular, not dense, not closed
    CHECK(isDenselyOrdered(groupAA()));
    CHECK(!isRegular(groupAA()));
    CHECK(!isDenseInHull(groupAA()));
    CHECK(!isClosedInHull(groupAA()));
    CHECK(!isImmediateInHull(groupAA()));

    // Q + A: dense in hull but not closed, not immediate
    CHECK(isRegular(groupQA()));
    CHECK(isDenseInHull(groupQA()));
    CHECK(!isClosedInHull(groupQA()));

    // prefix-primes omega sum: dense ordering, no last index -> closed
    CHECK(isDenselyOrdered(groupPP()));
    CHECK(!isRegular(groupPP()));
    CHECK(isClosedInHull(groupPP()));

    // single localized component at primes >= 3: regular, dense, not closed
    GroupDescriptor B = GroupDescriptor::finiteLex({subLocAtLeast(3)});
    CHECK(isRegular(B));
    CHECK(isDenseInHull(B));
    CHECK(!isClosedInHull(B));

    // Q + Z: discrete, regular, closed, not immediate
    GroupDescriptor QZ = GroupDescriptor::finiteLex({subQ(), subZ()});
    CHECK(isDiscretelyOrdered(QZ));
    CHECK(isRegular(QZ));
    CHECK(isClosedInHull(QZ));

    // Q^2 is its own hull
    GroupDescriptor QQ = GroupDescriptor::finiteLex({subQ(), subQ()});
    CHECK(isImmediateInHull(QQ));
    CHECK(isDenseInHull(QQ));
    CHECK(isClosedInHull(QQ));

    // trivial group
    GroupDescriptor T = GroupDescriptor::finiteLex({});
    CHECK(T.trivial());
    CHECK(isClosedInHull(T));
    CHECK(!isDiscretelyOrdered(T));
}

TEST_CASE("limit points") {
    // in A + A, (1/3, 0) is not a limit point; (0, 1/3) is
    CHECK(!isLimitPoint(h({{1, rat(1, 3)}}), groupAA()));
    CHECK(isLimitPoint(h({{2, rat(1, 3)}}), groupAA()));
    // members of a densely ordered group are limit points
    CHECK(isLimitPoint(h({{1, rat(1, 2)}}), groupAA()));
    // members of a discrete group are not
    CHECK(!isLimitPoint(h({{1, rat(1)}}), groupZZ()));
    // failure above the last index blocks approximation even if later levels fail too
    CHECK(!isLimitPoint(h({{1, rat(1, 3)}, {2, rat(1, 3)}}), groupAA()));
}

TEST_CASE("final segments: largest p-divisible and divisible convex subgroups") {
    GroupDescriptor G = groupPP();
    CHECK(largestPDivisibleConvex(G, 2) == FinalSegment::trivialSeg());
    CHECK(largestPDivisibleConvex(G, 3) == FinalSegment::whole());
    CHECK(largestPDivisibleConvex(G, 5) == FinalSegment::fromIndexExclusive(1));
    CHECK(largestPDivisibleConvex(G, 11) == FinalSegment::fromIndexExclusive(3));
    CHECK(largestDivisibleConvex(G) == FinalSegment::trivialSeg());

    GroupDescriptor QA = groupQA();
    CHECK(largestDivisibleConvex(QA) == FinalSegment::trivialSeg());
    CHECK(largestPDivisibleConvex(QA, 2) == FinalSegment::whole());
    CHECK(largestPDivisibleConvex(QA, 3) == FinalSegment::trivialSeg());
    CHECK(largestPDivisibleConvex(groupAA(), 3) == FinalSegment::trivialSeg());

    GroupDescriptor AQ = GroupDescriptor::finiteLex({A, subQ()});
    CHECK(largestDivisibleConvex(AQ) == FinalSegment::fromIndexExclusive(1));
    CHECK(largestPDivisibleConvex(AQ, 3) == FinalSegment::fromIndexExclusive(1));

    GroupDescriptor O1 = GroupDescriptor::omegaPlusOneLex(ConstantRule{subQ()}, subQ());
    CHECK(largestDivisibleConvex(O1) == FinalSegment::whole());
    GroupDescriptor O2 = GroupDescriptor::omegaPlusOneLex(ConstantRule{subZ()}, subQ());
    CHECK(largestDivisibleConvex(O2) == FinalSegment::afterAllFinite());
    GroupDescriptor O3 = GroupDescriptor::omegaPlusOneLex(ConstantRule{subQ()}, subZ());
    CHECK(largestDivisibleConvex(O3) == FinalSegment::trivialSeg());
    GroupDescriptor O4 = GroupDescriptor::omegaPlusOneLex(PrefixPrimesRule{}, subQ());
    CHECK(largestPDivisibleConvex(O4, 5) == FinalSegment::fromIndexExclusive(1));
    CHECK(largestPDivisibleConvex(O4, 2) == FinalSegment::afterAllFinite());

    CHECK(largestDivisibleConvex(GroupDescriptor::finiteLex({})) == FinalSegment::whole());
    CHECK_THROWS_AS(largestPDivisibleConvex(G, 4), std::invalid_argument);
}

TEST_CASE("segment membership, quotients and subgroups") {
    FinalSegment s = FinalSegment::fromIndexExclusive(2);
    CHECK(!s.containsIndex(Idx::finite(2)));
    CHECK(s.containsIndex(Idx::finite(3)));
    CHECK(s.containsIndex(Idx::topIndex()));
    CHECK(FinalSegment::afterAllFinite().containsIndex(Idx::topIndex()));
    CHECK(!FinalSegment::afterAllFinite().containsIndex(Idx::finite(10)));
    CHECK(FinalSegment::fromIndexExclusive(0) == FinalSegment::whole());

    GroupDescriptor G = groupPP();
    CHECK(groupStr(convexQuotient(G, FinalSegment::fromIndexExclusive(2))) ==
          "lex(loc{3}, loc{3,5})");
    CHECK(groupStr(segmentSubgroup(G, FinalSegment::fromIndexExclusive(2))) ==
          "omega(prefixprimes(2))");
    CHECK(segmentSubgroup(G, FinalSegment::fromIndexExclusive(2))
              .component(Idx::finite(1)) == subLoc({3, 5, 7}));
    CHECK(convexQuotient(G, FinalSegment::whole()).trivial());
    CHECK(convexQuotient(G, FinalSegment::trivialSeg()) == G);
    CHECK(segmentSubgroup(G, FinalSegment::whole()) == G);

    GroupDescriptor O = GroupDescriptor::omegaPlusOneLex(ConstantRule{subZ()}, subQ());
    CHECK(convexQuotient(O, FinalSegment::afterAllFinite()) ==
          GroupDescriptor::omegaLex(ConstantRule{subZ()}));
    CHECK(segmentSubgroup(O, FinalSegment::afterAllFinite()) ==
          GroupDescriptor::finiteLex({subQ()}));
    CHECK_THROWS_AS(convexQuotient(groupZZ(), FinalSegment::afterAllFinite()),
                    std::invalid_argument);
    CHECK_THROWS_AS(convexQuotient(groupZZ(), FinalSegment::fromIndexExclusive(5)),
                    std::invalid_argument);
}

TEST_CASE("witness for failure of density in the hull") {
    CHECK(findNondenseWitness(groupAA()) == h({{1, rat(1, 3)}}));
    CHECK(findNondenseWitness(groupPP()) == h({{1, rat(1, 2)}}));
    GroupDescriptor ZA = GroupDescriptor::finiteLex({subZ(), A});
    CHECK(findNondenseWitness(ZA) == h({{1, rat(1, 2)}}));
    // dense-in-hull and discrete groups are rejected
    CHECK_THROWS_AS(findNondenseWitness(groupQA()), std::domain_error);
    CHECK_THROWS_AS(findNondenseWitness(groupZZ()), std::domain_error);
}

TEST_CASE("definable subgroup sets from a witness") {
    GroupDescriptor G = groupAA();
    HullElement g0 = h({{1, rat(1, 3)}});
    auto member = [&](std::vector<std::pair<long, Rat>> t, DefSubgroupSet w) {
        return defsubgroupMember(G, g0, GroupElement(G, h(std::move(t))), w);
    };
    // D = [0, g0): nonnegative elements below (1/3, 0)
    CHECK(member({}, DefSubgroupSet::D));
    CHECK(member({{1, rat(1, 4)}}, DefSubgroupSet::D));
    CHECK(member({{2, rat(100)}}, DefSubgroupSet::D));
    CHECK(!member({{1, rat(1, 2)}}, DefSubgroupSet::D));
    CHECK(!member({{2, rat(-1)}}, DefSubgroupSet::D));
    // A = nonnegative with valuation above index 1
    CHECK(member({{2, rat(5, 8)}}, DefSubgroupSet::A));
    CHECK(member({}, DefSubgroupSet::A));
    CHECK(!member({{1, rat(1, 4)}}, DefSubgroupSet::A));
    CHECK(!member({{2, rat(-1)}}, DefSubgroupSet::A));
    // H = A u -A, the convex subgroup at index 1
    CHECK(defsubgroupMember(G, g0, GroupElement(G, h({{2, rat(-1)}})), DefSubgroupSet::H));
    CHECK(!defsubgroupMember(G, g0, GroupElement(G, h({{1, rat(1)}})), DefSubgroupSet::H));
    // g0 must be outside G
    CHECK_THROWS_AS(
        defsubgroupMember(G, h({{1, rat(1, 2)}}), GroupElement(G, HullElement{}), DefSubgroupSet::D),
        std::invalid_argument);
}

TEST_CASE("betweenness oracle") {
    GroupDescriptor AA = groupAA();
    auto r = oracleBetween(AA, h({{2, rat(1, 3)}}), h({{2, rat(11, 24)}}), 16);
    REQUIRE(r.has_value());
    CHECK(r->value == h({{2, rat(3, 8)}}));

    // no dyadic fills the gap pinned at an unreachable first coordinate
    CHECK(!oracleBetween(AA, h({{1, rat(1, 3)}}),
                         h({{1, rat(1, 3)}, {2, rat(1)}}), 64)
               .has_value());

    CHECK(oracleBetween(AA, HullElement{}, h({{2, rat(1)}}), 2)->value == h({{2, rat(1, 2)}}));

    GroupDescriptor ZZ = groupZZ();
    CHECK(!oracleBetween(ZZ, HullElement{}, h({{2, rat(1)}}), 64).has_value());
    // between (0,1) and (1,0) sits (0,2)
    auto r5 = oracleBetween(ZZ, h({{2, rat(1)}}), h({{1, rat(1)}}), 64);
    REQUIRE(r5.has_value());
    CHECK(r5->value == h({{2, rat(2)}}));
    CHECK(hullCmp(h({{2, rat(1)}}), r5->value) < 0);
    CHECK(hullCmp(r5->value, h({{1, rat(1)}})) < 0);

    // negative windows work too
    auto r6 = oracleBetween(AA, h({{1, rat(-1)}}), h({{1, rat(-1, 2)}}), 8);
    REQUIRE(r6.has_value());
    CHECK(hullCmp(h({{1, rat(-1)}}), r6->value) < 0);
    CHECK(hullCmp(r6->value, h({{1, rat(-1, 2)}})) < 0);

    CHECK_THROWS_AS(oracleBetween(AA, h({{1, rat(1)}}), h({{1, rat(1)}}), 8), std::domain_error);
}

TEST_CASE("canonical group printing") {
    CHECK(groupStr(GroupDescriptor::finiteLex({})) == "0");
    CHECK(groupStr(GroupDescriptor::finiteLex({subZ()})) == "Z");
    CHECK(groupStr(groupAA()) == "lex(loc{2}, loc{2})");
    CHECK(groupStr(groupQA()) == "lex(Q, loc{2})");
    CHECK(groupStr(GroupDescriptor::finiteLex({subLocAtLeast(3)})) == "loc{>=3}");
    CHECK(groupStr(groupPP()) == "omega(prefixprimes)");
    CHECK(groupStr(GroupDescriptor::omegaLex(ConstantRule{subQ()})) == "omega(const(Q))");
    CHECK(groupStr(GroupDescriptor::omegaPlusOneLex(PrefixPrimesRule{}, subZ())) ==
          "omegaplus1(prefixprimes, Z)");
}
