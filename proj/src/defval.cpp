#include "ordval/defval.hpp"

namespace ordval {

GroupCut::GroupCut(HullElement g, GroupDescriptor grp) : g0(std::move(g)), group(std::move(grp)) {
    if (gMember(g0, group)) throw std::invalid_argument("group cut point must lie outside G");
}

ResidueCut::ResidueCut(QuadExt a_) : a(std::move(a_)) {
    if (a.isRational()) throw std::invalid_argument("residue cut point must be irrational");
}

std::string caseStr(CaseTag c) {
    switch (c) {
        case CaseTag::Discrete: return "discrete";
        case CaseTag::GroupLimitPoint: return "group-limit-point";
        case CaseTag::ResidueLimitPoint: return "residue-limit-point";
    }
    return "";
}

bool caseAvailable(const CoeffField& k, const GroupDescriptor& G, CaseTag c) {
    switch (c) {
        case CaseTag::Discrete: return isDiscretelyOrdered(G);
        case CaseTag::GroupLimitPoint: return !isClosedInHull(G);
        case CaseTag::ResidueLimitPoint: return !k.declaredRealClosed;
    }
    return false;
}

CutPoint makeCut(const CoeffField& k, const GroupDescriptor& G, CaseTag c) {
    if (!caseAvailable(k, G, c))
        throw std::domain_error("cut case unavailable for this field and group: " + caseStr(c));
    switch (c) {
        case CaseTag::Discrete:
            return GroupCut(monomial(G.lastIndex(), rat(1, 2)), G);
        case CaseTag::GroupLimitPoint: {
            // The last component is densely ordered but not Q; 1/q for the
            // least missing prime q lies outside it and is a limit point.
            Idx last = G.lastIndex();
            long q = 2;
            while (G.component(last).allowed.contains(q) || !isPrime(q)) ++q;
            return GroupCut(monomial(last, rat(1, q)), G);
        }
        case CaseTag::ResidueLimitPoint: {
            if (k.kind == CoeffField::Kind::QuadraticExt)
                throw std::domain_error(
                    "residue cut over a quadratic field needs a second radical; unsupported");
            return ResidueCut(quadSqrtD(2));
        }
    }
    throw std::logic_error("unreachable");
}

bool memberDs(const Series& x, const CutPoint& cut) {
    if (const auto* gc = std::get_if<GroupCut>(&cut)) {
        if (x.group != gc->group) throw std::invalid_argument("cut/series group mismatch");
        if (x.isZero()) return true;
        return sSign(x) > 0 && hullCmp(*sVmin(x), gc->g0) > 0;
    }
    const auto& rc = std::get<ResidueCut>(cut);
    auto v = sVmin(x);
    if (v && hullSign(*v) < 0) return false;
    QuadExt res = sResidue(x);
    QuadExt low = qextArith(rc.a, QuadExt(rat(1)), ArithOp::Sub);
    return qextCmp(low, res) < 0 && qextCmp(res, rc.a) < 0;
}

bool memberOs(const Series& x, const CutPoint& cut) {
    if (const auto* gc = std::get_if<GroupCut>(&cut))
        if (x.group != gc->group) throw std::invalid_argument("cut/series group mismatch");
    auto v = sVmin(x);
    return !v || hullSign(*v) >= 0;
}

namespace {

Series seriesAbs(const Series& x) { return sSign(x) < 0 ? sNeg(x) : x; }

Series groupCutWitness(const Series& x, const GroupCut& cut) {
    const GroupDescriptor& G = cut.group;
    const HullElement v = *sVmin(x);  // vmin(x) < 0 here
    HullElement g1;
    if (isDiscretelyOrdered(G)) {
        // Least group element above g0: bump the last coordinate of g0 to
        // the next integer (our cuts only occupy the last level).
        Idx last = G.lastIndex();
        Rat c = cut.g0.at(last);
        HullElement rest = hullSub(cut.g0, monomial(last, c));
        g1 = hullAdd(rest, monomial(last, Rat(floorRat(c) + 1)));
        if (!gMember(g1, G)) throw std::domain_error("no discrete successor available above g0");
    } else {
        // g1 in G strictly inside (g0, g0 - vmin(x)), found by refining the
        // last coordinate with powers of a prime the dense last component
        // allows: c_k = (floor(g0_last * p^k) + 1) / p^k decreases to g0_last
        // from above, so some step lands inside the interval.
        HullElement hi = hullSub(cut.g0, v);
        Idx last = G.lastIndex();
        RationalSubgroup comp = G.component(last);
        long p = 2;
        while (!comp.allowed.contains(p) || !isPrime(p)) ++p;
        Rat g0last = cut.g0.at(last);
        HullElement rest = hullSub(cut.g0, monomial(last, g0last));
        Rat pk(1);
        bool ok = false;
        for (int k = 1; k <= 128 && !ok; ++k) {
            pk *= p;
            Rat c = rat(floorRat(g0last * pk) + 1, Int(pk.get_num()));
            g1 = hullAdd(rest, monomial(last, c));
            ok = gMember(g1, G) && hullCmp(cut.g0, g1) < 0 && hullCmp(g1, hi) < 0;
        }
        if (!ok) throw std::domain_error("no group element found inside the cut interval");
    }
    Series y = sMonomial(x.field, x.group, QuadExt(rat(1)), g1);
    // y lies below the cut, yet vmin(x*y) = vmin(x) + g1 <= g0 by choice of
    // g1, so the product escapes D.
    return y;
}

Series residueCutWitness(const Series& x, const ResidueCut& cut) {
    Series ax = seriesAbs(x);
    QuadExt c{rat(1)};
    auto v = sVmin(ax);
    if (v && hullSign(*v) == 0) {
        c = sResidue(ax);  // positive, non-infinitesimal part
        if (qextCmp(c, QuadExt(rat(1))) > 0) c = QuadExt(rat(1));
    }
    QuadExt lo = qextArith(cut.a, c, ArithOp::Sub);
    Rat b = rationalInInterval(lo, cut.a);
    return sConst(x.field, x.group, QuadExt(b));
}

}  // namespace

Series osViolationWitness(const Series& x, const CutPoint& cut) {
    if (const auto* gc = std::get_if<GroupCut>(&cut)) {
        if (memberOs(x, cut))
            throw std::domain_error("no violation: x lies in the valuation ring");
        return groupCutWitness(x, *gc);
    }
    const auto& rc = std::get<ResidueCut>(cut);
    auto v = sVmin(x);
    if (x.isZero() || (v && hullSign(*v) > 0))
        throw std::domain_error("no violation: |x| is infinitesimal or zero");
    return residueCutWitness(x, rc);
}

bool checkCondition41(const Series& x, const Series& y, const GroupCut& cut) {
    if (!memberDs(y, CutPoint(cut))) throw std::domain_error("y must lie in D");
    if (x.isZero() || y.isZero()) return true;
    return hullCmp(hullAdd(*sVmin(x), *sVmin(y)), cut.g0) > 0;
}

bool phiHolds(const Series& x) {
    if (x.isZero()) return true;
    HullElement half = hullScale(x.terms.front().first, rat(1, 2));
    if (!gMember(half, x.group)) return false;
    long ambient = x.field.kind == CoeffField::Kind::QuadraticExt ? x.field.d : 0;
    return qextSqrtIfSquare(x.terms.front().second, ambient).has_value();
}

TruncatedResult phiWitness(const Series& x, long nTerms) {
    if (x.isZero() || !phiHolds(x))
        throw std::domain_error("phiWitness requires a nonzero x satisfying the formula");
    TruncatedResult y = truncSqrt(x, nTerms);
    Series rem = sSub(x, sMul(y.terms, y.terms));
    if (!rem.isZero() && hullCmp(*sVmin(rem), *sVmin(x)) <= 0)
        throw std::logic_error("square-root witness failed its contract");
    return y;
}

}  // namespace ordval
