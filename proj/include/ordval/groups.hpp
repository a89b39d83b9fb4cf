/**
 * @file groups.hpp
 * @brief Ordered abelian groups presented as lexicographic/Hahn sums of
 *        rational subgroups, their elements, and the natural valuation.
 *
 * A group is described by its index set Gamma ({1..m}, omega, or omega
 * followed by a top index) together with one subgroup of Q per index. Index
 * order equals archimedean-class order: index 1 carries the largest
 * archimedean class, so the natural valuation of an element is the smallest
 * occupied index. Elements of the divisible hull are finitely supported
 * index -> rational maps; elements of G are hull elements whose coefficients
 * all lie in their component subgroups.
 */
#pragma once

#include "ordval/numeric.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace ordval {

// ---- index set ----

/// Position in Gamma. Finite indices are 1-based; `top` is the extra index
/// above all finite ones in an omega+1 shaped group.
struct Idx {
    long n = 1;
    bool top = false;

    static Idx finite(long k) { return Idx{k, false}; }
    static Idx topIndex() { return Idx{0, true}; }

    bool operator==(const Idx& o) const { return top == o.top && (top || n == o.n); }
    std::strong_ordering operator<=>(const Idx& o) const {
        if (top != o.top) return top ? std::strong_ordering::greater : std::strong_ordering::less;
        if (top) return std::strong_ordering::equal;
        return n <=> o.n;
    }
};

std::string idxStr(const Idx& i);

// ---- components ----

/// Set of primes allowed in reduced denominators of a localized subgroup.
struct PrimeSet {
    enum class Kind { Empty, Finite, AllAtLeast, All };
    Kind kind = Kind::Empty;
    std::vector<long> primes;  // Finite: sorted, distinct, prime
    long bound = 0;            // AllAtLeast: prime lower bound

    static PrimeSet empty() { return {}; }
    static PrimeSet all() { return {Kind::All, {}, 0}; }
    static PrimeSet finite(std::vector<long> ps);
    static PrimeSet allAtLeast(long p);

    bool contains(long p) const;
    /// True iff every prime factor of den lies in the set (den >= 1).
    bool allowsDenominator(const Int& den) const;
    bool operator==(const PrimeSet&) const = default;
};

bool isPrime(long p);
long nthOddPrime(long i);  // 1 -> 3, 2 -> 5, ...

/// The subgroup of Q of rationals whose reduced denominator factors over
/// `allowed`. Empty -> Z, All -> Q.
struct RationalSubgroup {
    PrimeSet allowed;

    bool contains(const Rat& r) const { return allowed.allowsDenominator(r.get_den()); }
    bool denselyOrdered() const { return allowed.kind != PrimeSet::Kind::Empty; }
    bool pDivisible(long p) const { return allowed.contains(p); }
    bool divisible() const;  // == Q
    bool isZ() const { return allowed.kind == PrimeSet::Kind::Empty; }
    bool operator==(const RationalSubgroup&) const = default;
};

inline RationalSubgroup subZ() { return {PrimeSet::empty()}; }
inline RationalSubgroup subQ() { return {PrimeSet::all()}; }
inline RationalSubgroup subLoc(std::vector<long> ps) { return {PrimeSet::finite(std::move(ps))}; }
inline RationalSubgroup subLocAtLeast(long p) { return {PrimeSet::allAtLeast(p)}; }

// ---- descriptors ----

struct ConstantRule {
    RationalSubgroup comp;
    bool operator==(const ConstantRule&) const = default;
};
/// Component n is the localization at the first n + offset odd primes.
/// Offsets arise when taking final-segment subgroups of such a sum.
struct PrefixPrimesRule {
    long offset = 0;
    bool operator==(const PrefixPrimesRule&) const = default;
};
using ComponentRule = std::variant<ConstantRule, PrefixPrimesRule>;

RationalSubgroup ruleComponent(const ComponentRule& r, long n);

struct GroupDescriptor {
    enum class Shape { FiniteLex, OmegaLex, OmegaPlusOneLex };
    Shape shape = Shape::FiniteLex;
    std::vector<RationalSubgroup> comps;  // FiniteLex; empty list = trivial group {0}
    ComponentRule rule = ConstantRule{subQ()};
    RationalSubgroup top;  // OmegaPlusOneLex only

    static GroupDescriptor finiteLex(std::vector<RationalSubgroup> cs);
    static GroupDescriptor omegaLex(ComponentRule r);
    static GroupDescriptor omegaPlusOneLex(ComponentRule r, RationalSubgroup t);

    bool trivial() const { return shape == Shape::FiniteLex && comps.empty(); }
    bool validIndex(const Idx& i) const;
    RationalSubgroup component(const Idx& i) const;
    bool hasLastIndex() const { return shape != Shape::OmegaLex; }
    Idx lastIndex() const;  // requires hasLastIndex() and not trivial()
    /// True iff every component is Q.
    bool allComponentsDivisible() const;
    bool operator==(const GroupDescriptor&) const = default;
};

// ---- elements ----

/// Finitely supported element of div(G): sorted (index, coefficient) pairs
/// with nonzero coefficients.
struct HullElement {
    std::vector<std::pair<Idx, Rat>> support;

    bool isZero() const { return support.empty(); }
    Rat at(const Idx& i) const;
    bool operator==(const HullElement& o) const { return support == o.support; }
};

HullElement hullFrom(std::vector<std::pair<Idx, Rat>> terms);  // normalizes
HullElement monomial(const Idx& i, const Rat& c);

HullElement hullAdd(const HullElement& x, const HullElement& y);
HullElement hullNeg(const HullElement& x);
HullElement hullSub(const HullElement& x, const HullElement& y);
HullElement hullScale(const HullElement& x, const Rat& c);
/// Lexicographic comparison: sign of the leading (smallest-index)
/// coefficient of the difference. Returns <0, 0, >0.
int hullCmp(const HullElement& x, const HullElement& y);
inline int hullSign(const HullElement& x) { return hullCmp(x, HullElement{}); }

/// Natural valuation: min index of the support, or empty for zero (infty).
std::optional<Idx> natValuation(const HullElement& x);

std::string hullStr(const HullElement& x);

/// True iff every coefficient of x lies in its component subgroup. Throws
/// std::out_of_range if some support index is not in Gamma.
bool gMember(const HullElement& x, const GroupDescriptor& G);

/// Element of G: membership checked at construction (std::invalid_argument).
struct GroupElement {
    GroupDescriptor group;
    HullElement value;

    GroupElement(GroupDescriptor g, HullElement v);
};

/// y in G with n*y == x, if the coordinatewise division stays in G.
std::optional<GroupElement> divideBy(const GroupElement& x, long n);

// ---- decision procedures ----

bool isDenselyOrdered(const GroupDescriptor& G);
bool isDiscretelyOrdered(const GroupDescriptor& G);
/// Every quotient by a nontrivial convex subgroup is divisible; for these
/// descriptors: every non-maximal component equals Q.
bool isRegular(const GroupDescriptor& G);
bool isDenseInHull(const GroupDescriptor& G);
/// The extension G <= div(G) is immediate: every component divisible.
bool isImmediateInHull(const GroupDescriptor& G);
/// Whether x in div(G) is a limit point of G (two-sided).
bool isLimitPoint(const HullElement& x, const GroupDescriptor& G);
bool isClosedInHull(const GroupDescriptor& G);

/// Convex subgroup {g : v(g) > index}, or G, or {0}. AfterAllFinite is the
/// segment containing only the top index of an omega+1 shaped group.
struct FinalSegment {
    enum class Kind { Whole, FromIndexExclusive, AfterAllFinite, Trivial };
    Kind kind = Kind::Trivial;
    long index = 0;  // FromIndexExclusive: finite cutoff

    static FinalSegment whole() { return {Kind::Whole, 0}; }
    static FinalSegment fromIndexExclusive(long n) {
        return n <= 0 ? whole() : FinalSegment{Kind::FromIndexExclusive, n};
    }
    static FinalSegment afterAllFinite() { return {Kind::AfterAllFinite, 0}; }
    static FinalSegment trivialSeg() { return {Kind::Trivial, 0}; }

    bool containsIndex(const Idx& i) const;
    bool operator==(const FinalSegment&) const = default;
};

std::string segmentStr(const FinalSegment& s);

/// Largest final segment all of whose components are p-divisible.
FinalSegment largestPDivisibleConvex(const GroupDescriptor& G, long p);
/// Largest final segment all of whose components are divisible (= Q).
FinalSegment largestDivisibleConvex(const GroupDescriptor& G);

/// Descriptor of G modulo the convex subgroup S: the components at indices
/// outside S (an initial-segment truncation of Gamma).
GroupDescriptor convexQuotient(const GroupDescriptor& G, const FinalSegment& S);
/// Descriptor of the convex subgroup S itself (components inside S).
GroupDescriptor segmentSubgroup(const GroupDescriptor& G, const FinalSegment& S);

/// g0 = (1/q) * 1_N in div(G) \ cl(G) with N non-maximal. Requires G densely
/// ordered and not dense in its hull (std::domain_error otherwise).
HullElement findNondenseWitness(const GroupDescriptor& G);

enum class DefSubgroupSet { D, A, H };

/// Membership in the definable sets built from g0 = g1/N: D = [0, g0) cap G,
/// A = {g >= 0 : g + D subseteq D}, H = -A cup A (the convex subgroup G_N,
/// N the first failure index of g0).
bool defsubgroupMember(const GroupDescriptor& G, const HullElement& g0, const GroupElement& g,
                       DefSubgroupSet which);

/// Brute-force search for an element of G strictly between a and b, over
/// supports inside supp(a) u supp(b) u adjacent indices with reduced
/// denominators <= denomBound. Empty means none found at that bound.
std::optional<GroupElement> oracleBetween(const GroupDescriptor& G, const HullElement& a,
                                          const HullElement& b, long denomBound);

std::string groupStr(const GroupDescriptor& G);

}  // namespace ordval
