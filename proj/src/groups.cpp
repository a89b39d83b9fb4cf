#include "ordval/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace ordval {

// ---- primes ----

bool isPrime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

long nthOddPrime(long i) {
    long p = 3;
    for (long k = 1;; ++p) {
        if (isPrime(p)) {
            if (k == i) return p;
            ++k;
        }
    }
}

std::string idxStr(const Idx& i) { return i.top ? "top" : std::to_string(i.n); }

// ---- PrimeSet ----

PrimeSet PrimeSet::finite(std::vector<long> ps) {
    std::sort(ps.begin(), ps.end());
    for (size_t k = 0; k < ps.size(); ++k) {
        if (!isPrime(ps[k])) throw std::invalid_argument("non-prime in prime set");
        if (k > 0 && ps[k] == ps[k - 1]) throw std::invalid_argument("duplicate prime in prime set");
    }
    return {Kind::Finite, std::move(ps), 0};
}

PrimeSet PrimeSet::allAtLeast(long p) {
    if (!isPrime(p)) throw std::invalid_argument("prime set bound must be prime");
    return {Kind::AllAtLeast, {}, p};
}

bool PrimeSet::contains(long p) const {
    switch (kind) {
        case Kind::Empty: return false;
        case Kind::All: return true;
        case Kind::AllAtLeast: return p >= bound;
        case Kind::Finite: return std::binary_search(primes.begin(), primes.end(), p);
    }
    return false;
}

bool PrimeSet::allowsDenominator(const Int& den) const {
    if (den == 1) return true;
    switch (kind) {
        case Kind::Empty:
            return false;
        case Kind::All:
            return true;
        case Kind::Finite: {
            Int f = den;
            for (long p : primes)
                while (mpz_divisible_ui_p(f.get_mpz_t(), p)) f /= p;
            return f == 1;
        }
        case Kind::AllAtLeast:
            // All prime factors >= bound iff no prime < bound divides den.
            for (long q = 2; q < bound; ++q)
                if (isPrime(q) && mpz_divisible_ui_p(den.get_mpz_t(), q)) return false;
            return true;
    }
    return false;
}

bool RationalSubgroup::divisible() const {
    return allowed.kind == PrimeSet::Kind::All ||
           (allowed.kind == PrimeSet::Kind::AllAtLeast && allowed.bound == 2);
}

// ---- rules & descriptors ----

RationalSubgroup ruleComponent(const ComponentRule& r, long n) {
    if (const auto* c = std::get_if<ConstantRule>(&r)) return c->comp;
    const auto& pp = std::get<PrefixPrimesRule>(r);
    std::vector<long> ps;
    for (long i = 1; i <= n + pp.offset; ++i) ps.push_back(nthOddPrime(i));
    return subLoc(std::move(ps));
}

GroupDescriptor GroupDescriptor::finiteLex(std::vector<RationalSubgroup> cs) {
    GroupDescriptor g;
    g.shape = Shape::FiniteLex;
    g.comps = std::move(cs);
    return g;
}

GroupDescriptor GroupDescriptor::omegaLex(ComponentRule r) {
    GroupDescriptor g;
    g.shape = Shape::OmegaLex;
    g.rule = std::move(r);
    return g;
}

GroupDescriptor GroupDescriptor::omegaPlusOneLex(ComponentRule r, RationalSubgroup t) {
    GroupDescriptor g;
    g.shape = Shape::OmegaPlusOneLex;
    g.rule = std::move(r);
    g.top = std::move(t);
    return g;
}

bool GroupDescriptor::validIndex(const Idx& i) const {
    switch (shape) {
        case Shape::FiniteLex: return !i.top && i.n >= 1 && i.n <= (long)comps.size();
        case Shape::OmegaLex: return !i.top && i.n >= 1;
        case Shape::OmegaPlusOneLex: return i.top || i.n >= 1;
    }
    return false;
}

RationalSubgroup GroupDescriptor::component(const Idx& i) const {
    if (!validIndex(i)) throw std::out_of_range("index outside Gamma");
    switch (shape) {
        case Shape::FiniteLex: return comps[i.n - 1];
        case Shape::OmegaLex: return ruleComponent(rule, i.n);
        case Shape::OmegaPlusOneLex: return i.top ? top : ruleComponent(rule, i.n);
    }
    throw std::logic_error("unreachable");
}

Idx GroupDescriptor::lastIndex() const {
    if (shape == Shape::FiniteLex) {
        if (comps.empty()) throw std::logic_error("trivial group has no last index");
        return Idx::finite((long)comps.size());
    }
    if (shape == Shape::OmegaPlusOneLex) return Idx::topIndex();
    throw std::logic_error("omega-indexed group has no last index");
}

bool GroupDescriptor::allComponentsDivisible() const {
    switch (shape) {
        case Shape::FiniteLex:
            return std::all_of(comps.begin(), comps.end(),
                               [](const RationalSubgroup& c) { return c.divisible(); });
        case Shape::OmegaLex:
        case Shape::OmegaPlusOneLex: {
            bool ruleDiv = std::holds_alternative<ConstantRule>(rule) &&
                           std::get<ConstantRule>(rule).comp.divisible();
            if (shape == Shape::OmegaLex) return ruleDiv;
            return ruleDiv && top.divisible();
        }
    }
    return false;
}

// ---- hull elements ----

HullElement hullFrom(std::vector<std::pair<Idx, Rat>> terms) {
    std::map<Idx, Rat> acc;
    for (auto& [i, c] : terms) acc[i] += c;
    HullElement x;
    for (auto& [i, c] : acc)
        if (sgn(c) != 0) x.support.emplace_back(i, c);
    return x;
}

HullElement monomial(const Idx& i, const Rat& c) {
    HullElement x;
    if (sgn(c) != 0) x.support.emplace_back(i, c);
    return x;
}

Rat HullElement::at(const Idx& i) const {
    for (const auto& [j, c] : support)
        if (j == i) return c;
    return Rat(0);
}

HullElement hullAdd(const HullElement& x, const HullElement& y) {
    HullElement z;
    size_t a = 0, b = 0;
    while (a < x.support.size() || b < y.support.size()) {
        if (b == y.support.size() ||
            (a < x.support.size() && x.support[a].first < y.support[b].first)) {
            z.support.push_back(x.support[a++]);
        } else if (a == x.support.size() || y.support[b].first < x.support[a].first) {
            z.support.push_back(y.support[b++]);
        } else {
            Rat c = x.support[a].second + y.support[b].second;
            if (sgn(c) != 0) z.support.emplace_back(x.support[a].first, c);
            ++a, ++b;
        }
    }
    return z;
}

HullElement hullNeg(const HullElement& x) {
    HullElement z = x;
    for (auto& [i, c] : z.support) c = -c;
    return z;
}

HullElement hullSub(const HullElement& x, const HullElement& y) { return hullAdd(x, hullNeg(y)); }

HullElement hullScale(const HullElement& x, const Rat& c) {
    if (sgn(c) == 0) return {};
    HullElement z = x;
    for (auto& [i, v] : z.support) v *= c;
    return z;
}

int hullCmp(const HullElement& x, const HullElement& y) {
    size_t a = 0, b = 0;
    while (a < x.support.size() || b < y.support.size()) {
        if (b == y.support.size() ||
            (a < x.support.size() && x.support[a].first < y.support[b].first))
            return sgn(x.support[a].second);
        if (a == x.support.size() || y.support[b].first < x.support[a].first)
            return -sgn(y.support[b].second);
        int c = cmp(x.support[a].second, y.support[b].second);
        if (c != 0) return c;
        ++a, ++b;
    }
    return 0;
}

std::optional<Idx> natValuation(const HullElement& x) {
    if (x.isZero()) return std::nullopt;
    return x.support.front().first;
}

std::string hullStr(const HullElement& x) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [i, c] : x.support) {
        if (!first) out << ", ";
        first = false;
        out << idxStr(i) << ": " << ratStr(c);
    }
    out << "}";
    return out.str();
}

bool gMember(const HullElement& x, const GroupDescriptor& G) {
    for (const auto& [i, c] : x.support)
        if (!G.component(i).contains(c)) return false;
    return true;
}

GroupElement::GroupElement(GroupDescriptor g, HullElement v)
    : group(std::move(g)), value(std::move(v)) {
    if (!gMember(value, group))
        throw std::invalid_argument("element has a coefficient outside its component subgroup");
}

std::optional<GroupElement> divideBy(const GroupElement& x, long n) {
    if (n < 1) throw std::domain_error("divideBy: n must be >= 1");
    HullElement y = hullScale(x.value, rat(1, n));
    if (!gMember(y, x.group)) return std::nullopt;
    return GroupElement(x.group, std::move(y));
}

// ---- decision procedures ----

bool isDenselyOrdered(const GroupDescriptor& G) {
    if (!G.hasLastIndex()) return true;
    if (G.trivial()) return true;
    return G.component(G.lastIndex()).denselyOrdered();
}

bool isDiscretelyOrdered(const GroupDescriptor& G) {
    return !G.trivial() && G.hasLastIndex() && G.component(G.lastIndex()).isZ();
}

bool isRegular(const GroupDescriptor& G) {
    // Convex subgroups are final-segment sums, so all quotients are divisible
    // iff every non-maximal component is Q.
    if (G.trivial()) return true;
    switch (G.shape) {
        case GroupDescriptor::Shape::FiniteLex:
            for (size_t i = 0; i + 1 < G.comps.size(); ++i)
                if (!G.comps[i].divisible()) return false;
            return true;
        case GroupDescriptor::Shape::OmegaLex:
            return G.allComponentsDivisible();
        case GroupDescriptor::Shape::OmegaPlusOneLex:
            return std::holds_alternative<ConstantRule>(G.rule) &&
                   std::get<ConstantRule>(G.rule).comp.divisible();
    }
    return false;
}

bool isDenseInHull(const GroupDescriptor& G) { return isRegular(G) && isDenselyOrdered(G); }

bool isImmediateInHull(const GroupDescriptor& G) { return G.allComponentsDivisible(); }

bool isLimitPoint(const HullElement& x, const GroupDescriptor& G) {
    if (gMember(x, G)) return isDenselyOrdered(G);
    // First failing coordinate must be matched exactly by any approximant, so
    // x is approachable only when the failure sits at the very last level and
    // that component is densely ordered.
    Idx fail{};
    for (const auto& [i, c] : x.support)
        if (!G.component(i).contains(c)) {
            fail = i;
            break;
        }
    return G.hasLastIndex() && fail == G.lastIndex() && G.component(fail).denselyOrdered();
}

bool isClosedInHull(const GroupDescriptor& G) {
    if (G.trivial()) return true;
    if (!G.hasLastIndex()) return true;
    RationalSubgroup last = G.component(G.lastIndex());
    return !(last.denselyOrdered() && !last.divisible());
}

// ---- final segments ----

bool FinalSegment::containsIndex(const Idx& i) const {
    switch (kind) {
        case Kind::Whole: return true;
        case Kind::Trivial: return false;
        case Kind::AfterAllFinite: return i.top;
        case Kind::FromIndexExclusive: return i.top || i.n > index;
    }
    return false;
}

std::string segmentStr(const FinalSegment& s) {
    switch (s.kind) {
        case FinalSegment::Kind::Whole: return "whole";
        case FinalSegment::Kind::Trivial: return "trivial";
        case FinalSegment::Kind::AfterAllFinite: return "above-all-finite";
        case FinalSegment::Kind::FromIndexExclusive: return "above " + std::to_string(s.index);
    }
    return "";
}

namespace {

// Largest final segment whose components all satisfy `good`.
FinalSegment largestSegmentWhere(const GroupDescriptor& G,
                                 const std::function<bool(const RationalSubgroup&)>& good) {
    using Shape = GroupDescriptor::Shape;
    switch (G.shape) {
        case Shape::FiniteLex: {
            long m = (long)G.comps.size();
            long t = m;
            while (t > 0 && good(G.comps[t - 1])) --t;
            if (t == m) return FinalSegment::trivialSeg();
            return FinalSegment::fromIndexExclusive(t);
        }
        case Shape::OmegaLex: {
            if (const auto* c = std::get_if<ConstantRule>(&G.rule))
                return good(c->comp) ? FinalSegment::whole() : FinalSegment::trivialSeg();
            // Prefix-primes components grow; a final segment works iff some
            // tail is uniformly good, i.e. good holds from some index on.
            const auto& pp = std::get<PrefixPrimesRule>(G.rule);
            for (long n = 1; n <= pp.offset + 64; ++n) {
                if (good(ruleComponent(G.rule, n)))
                    // Components only gain primes, so goodness persists
                    // upward for p-divisibility style predicates.
                    return FinalSegment::fromIndexExclusive(n - 1);
            }
            return FinalSegment::trivialSeg();
        }
        case Shape::OmegaPlusOneLex: {
            if (!good(G.top)) return FinalSegment::trivialSeg();
            GroupDescriptor body = GroupDescriptor::omegaLex(G.rule);
            FinalSegment inner = largestSegmentWhere(body, good);
            if (inner.kind == FinalSegment::Kind::Whole) return FinalSegment::whole();
            if (inner.kind == FinalSegment::Kind::Trivial) return FinalSegment::afterAllFinite();
            return inner;  // FromIndexExclusive carries over, top included
        }
    }
    return FinalSegment::trivialSeg();
}

}  // namespace

FinalSegment largestPDivisibleConvex(const GroupDescriptor& G, long p) {
    if (!isPrime(p)) throw std::invalid_argument("largestPDivisibleConvex: p must be prime");
    if (G.trivial()) return FinalSegment::whole();
    return largestSegmentWhere(G, [p](const RationalSubgroup& c) { return c.pDivisible(p); });
}

FinalSegment largestDivisibleConvex(const GroupDescriptor& G) {
    if (G.trivial()) return FinalSegment::whole();
    return largestSegmentWhere(G, [](const RationalSubgroup& c) { return c.divisible(); });
}

GroupDescriptor convexQuotient(const GroupDescriptor& G, const FinalSegment& S) {
    using Shape = GroupDescriptor::Shape;
    switch (S.kind) {
        case FinalSegment::Kind::Trivial:
            return G;
        case FinalSegment::Kind::Whole:
            return GroupDescriptor::finiteLex({});
        case FinalSegment::Kind::AfterAllFinite:
            if (G.shape != Shape::OmegaPlusOneLex)
                throw std::invalid_argument("segment does not fit this index set");
            return GroupDescriptor::omegaLex(G.rule);
        case FinalSegment::Kind::FromIndexExclusive: {
            std::vector<RationalSubgroup> cs;
            if (G.shape == Shape::FiniteLex && S.index > (long)G.comps.size())
                throw std::invalid_argument("segment does not fit this index set");
            for (long i = 1; i <= S.index; ++i) cs.push_back(G.component(Idx::finite(i)));
            return GroupDescriptor::finiteLex(std::move(cs));
        }
    }
    throw std::logic_error("unreachable");
}

GroupDescriptor segmentSubgroup(const GroupDescriptor& G, const FinalSegment& S) {
    using Shape = GroupDescriptor::Shape;
    switch (S.kind) {
        case FinalSegment::Kind::Whole:
            return G;
        case FinalSegment::Kind::Trivial:
            return GroupDescriptor::finiteLex({});
        case FinalSegment::Kind::AfterAllFinite:
            if (G.shape != Shape::OmegaPlusOneLex)
                throw std::invalid_argument("segment does not fit this index set");
            return GroupDescriptor::finiteLex({G.top});
        case FinalSegment::Kind::FromIndexExclusive: {
            if (G.shape == Shape::FiniteLex) {
                if (S.index > (long)G.comps.size())
                    throw std::invalid_argument("segment does not fit this index set");
                std::vector<RationalSubgroup> cs(G.comps.begin() + S.index, G.comps.end());
                return GroupDescriptor::finiteLex(std::move(cs));
            }
            ComponentRule shifted = G.rule;
            if (auto* pp = std::get_if<PrefixPrimesRule>(&shifted)) pp->offset += S.index;
            if (G.shape == Shape::OmegaLex) return GroupDescriptor::omegaLex(shifted);
            return GroupDescriptor::omegaPlusOneLex(shifted, G.top);
        }
    }
    throw std::logic_error("unreachable");
}

// ---- Prop 3.9 machinery ----

namespace {

long smallestPrimeOutside(const PrimeSet& s) {
    for (long p = 2;; ++p)
        if (isPrime(p) && !s.contains(p)) return p;
}

}  // namespace

HullElement findNondenseWitness(const GroupDescriptor& G) {
    if (!isDenselyOrdered(G) || isDenseInHull(G))
        throw std::domain_error(
            "findNondenseWitness requires a densely ordered group not dense in its hull");
    // Smallest non-maximal index carrying a non-divisible component.
    std::optional<Idx> N;
    if (G.shape == GroupDescriptor::Shape::FiniteLex) {
        for (long i = 1; i + 1 <= (long)G.comps.size(); ++i)
            if (!G.comps[i - 1].divisible()) {
                N = Idx::finite(i);
                break;
            }
    } else {
        for (long i = 1; i <= 64; ++i)
            if (!ruleComponent(G.rule, i).divisible()) {
                N = Idx::finite(i);
                break;
            }
    }
    if (!N) throw std::logic_error("no non-maximal non-divisible component found");
    long q = smallestPrimeOutside(G.component(*N).allowed);
    return monomial(*N, rat(1, q));
}

bool defsubgroupMember(const GroupDescriptor& G, const HullElement& g0, const GroupElement& g,
                       DefSubgroupSet which) {
    if (gMember(g0, G)) throw std::invalid_argument("g0 must lie outside G");
    Idx N{};
    bool found = false;
    for (const auto& [i, c] : g0.support)
        if (!G.component(i).contains(c)) {
            N = i;
            found = true;
            break;
        }
    if (!found) throw std::logic_error("unreachable");
    const HullElement& x = g.value;
    switch (which) {
        case DefSubgroupSet::D:
            return hullSign(x) >= 0 && hullCmp(x, g0) < 0;
        case DefSubgroupSet::A: {
            if (hullSign(x) < 0) return false;
            auto v = natValuation(x);
            return !v || *v > N;
        }
        case DefSubgroupSet::H: {
            auto v = natValuation(x);
            return !v || *v > N;
        }
    }
    return false;
}

// ---- brute-force betweenness oracle ----

namespace {

// Enumerates rationals m/d in the window, all reduced denominators allowed
// by comp and <= bound, ordered by denominator then numerator, until the
// visitor returns true. Returns whether the visitor accepted a candidate.
template <typename Visit>
bool windowCandidates(const RationalSubgroup& comp, long bound, const Rat& lo, const Rat& hi,
                      bool includeLo, bool includeHi, Visit&& visit) {
    for (long d = 1; d <= bound; ++d) {
        if (!comp.allowed.allowsDenominator(Int(d))) continue;
        Rat lod = lo * d, hid = hi * d;
        Int m0 = floorRat(lod);
        if (!includeLo || Rat(m0) != lod) m0 += 1;
        Int m1 = floorRat(hid);
        if (!includeHi && Rat(m1) == hid) m1 -= 1;
        for (Int m = m0; m <= m1; ++m) {
            Rat c = rat(m, Int(d));
            if (c.get_den() <= bound && visit(c)) return true;
        }
    }
    return false;
}

struct BetweenSearch {
    const GroupDescriptor& G;
    const HullElement& a;
    const HullElement& b;
    long bound;
    std::vector<Idx> indices;
    std::vector<std::pair<Idx, Rat>> chosen;

    bool run(size_t k, bool tightLow, bool tightHigh, HullElement& result) {
        if (!tightLow && !tightHigh) {
            result = hullFrom(chosen);
            return true;
        }
        if (k == indices.size()) return false;  // still pinned to a or b
        const Idx& i = indices[k];
        RationalSubgroup comp = G.component(i);
        Rat ai = a.at(i), bi = b.at(i);
        auto tryCoeff = [&](const Rat& c, bool tl, bool th) {
            if (sgn(c) != 0) chosen.emplace_back(i, c);
            bool ok = run(k + 1, tl, th, result);
            if (sgn(c) != 0) chosen.pop_back();
            return ok;
        };
        auto release = [&](const Rat& c) { return tryCoeff(c, false, false); };
        if (tightLow && tightHigh) {
            if (cmp(ai, bi) == 0) {
                // Forced to match both; stay pinned on this level.
                return comp.contains(ai) && ai.get_den() <= bound && tryCoeff(ai, true, true);
            }
            if (windowCandidates(comp, bound, ai, bi, false, false, release)) return true;
            if (comp.contains(ai) && ai.get_den() <= bound && tryCoeff(ai, true, false))
                return true;
            if (comp.contains(bi) && bi.get_den() <= bound && tryCoeff(bi, false, true))
                return true;
            return false;
        }
        if (tightLow) {
            if (windowCandidates(comp, bound, ai, ai + 1, false, true, release)) return true;
            return comp.contains(ai) && ai.get_den() <= bound && tryCoeff(ai, true, false);
        }
        // tightHigh
        if (windowCandidates(comp, bound, bi - 1, bi, true, false, release)) return true;
        return comp.contains(bi) && bi.get_den() <= bound && tryCoeff(bi, false, true);
    }
};

}  // namespace

std::optional<GroupElement> oracleBetween(const GroupDescriptor& G, const HullElement& a,
                                          const HullElement& b, long denomBound) {
    if (hullCmp(a, b) >= 0) throw std::domain_error("oracleBetween requires a < b");
    if (denomBound < 1) throw std::domain_error("oracleBetween requires denomBound >= 1");
    std::vector<Idx> cand;
    auto push = [&](const Idx& i) {
        if (G.validIndex(i) && std::find(cand.begin(), cand.end(), i) == cand.end())
            cand.push_back(i);
    };
    for (const HullElement* e : {&a, &b})
        for (const auto& [i, c] : e->support) {
            if (!i.top) {
                push(Idx::finite(i.n - 1));
                push(i);
                push(Idx::finite(i.n + 1));
            } else {
                push(i);
            }
            if (G.shape == GroupDescriptor::Shape::OmegaPlusOneLex) push(Idx::topIndex());
        }
    std::sort(cand.begin(), cand.end());
    BetweenSearch search{G, a, b, denomBound, std::move(cand), {}};
    HullElement result;
    if (!search.run(0, true, true, result)) return std::nullopt;
    return GroupElement(G, std::move(result));
}

// ---- printing ----

namespace {

std::string subgroupStr(const RationalSubgroup& c) {
    switch (c.allowed.kind) {
        case PrimeSet::Kind::Empty: return "Z";
        case PrimeSet::Kind::All: return "Q";
        case PrimeSet::Kind::AllAtLeast: return "loc{>=" + std::to_string(c.allowed.bound) + "}";
        case PrimeSet::Kind::Finite: {
            std::string s = "loc{";
            for (size_t i = 0; i < c.allowed.primes.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(c.allowed.primes[i]);
            }
            return s + "}";
        }
    }
    return "";
}

std::string ruleStr(const ComponentRule& r) {
    if (const auto* c = std::get_if<ConstantRule>(&r)) return "const(" + subgroupStr(c->comp) + ")";
    const auto& pp = std::get<PrefixPrimesRule>(r);
    if (pp.offset == 0) return "prefixprimes";
    return "prefixprimes(" + std::to_string(pp.offset) + ")";
}

}  // namespace

std::string groupStr(const GroupDescriptor& G) {
    switch (G.shape) {
        case GroupDescriptor::Shape::FiniteLex: {
            if (G.comps.empty()) return "0";
            if (G.comps.size() == 1) return subgroupStr(G.comps[0]);
            std::string s = "lex(";
            for (size_t i = 0; i < G.comps.size(); ++i) {
                if (i) s += ", ";
                s += subgroupStr(G.comps[i]);
            }
            return s + ")";
        }
        case GroupDescriptor::Shape::OmegaLex:
            return "omega(" + ruleStr(G.rule) + ")";
        case GroupDescriptor::Shape::OmegaPlusOneLex:
            return "omegaplus1(" + ruleStr(G.rule) + ", " + subgroupStr(G.top) + ")";
    }
    return "";
}

}  // namespace ordval
