/**
 * @file defval.hpp
 * @brief Cut-based definable valuation rings on Hahn series fields.
 *
 * A cut point s lies outside the topological closure of the field: either
 * t^g0 for a hull element g0 outside the value group, or an irrational
 * algebraic number a outside a rational coefficient field. From the cut one
 * builds the set D = {x >= 0 : x < s} (resp. the interval (a-1, a)), the
 * infinitesimal stabilizer A, and finally the convex valuation ring
 * O = {x : x stabilizes A u -A}. These memberships are decided by exact
 * leading-term rules, and each negative O-membership claim can be certified
 * by a constructed witness.
 */
#pragma once

#include "ordval/series.hpp"

namespace ordval {

/// Cut t^g0 with g0 in div(G) \ G.
struct GroupCut {
    HullElement g0;
    GroupDescriptor group;

    GroupCut(HullElement g, GroupDescriptor grp);
};

/// Cut at an irrational a = u + v*sqrt(d) (v != 0) over rational
/// coefficients; a is a limit point of the field since Q is dense in R.
struct ResidueCut {
    QuadExt a;

    explicit ResidueCut(QuadExt a_);
};

using CutPoint = std::variant<GroupCut, ResidueCut>;

/// Which shape of cut construction applies.
enum class CaseTag { Discrete, GroupLimitPoint, ResidueLimitPoint };

std::string caseStr(CaseTag c);

/// Whether the named construction is available over (k, G):
/// Discrete iff G is discretely ordered; GroupLimitPoint iff G is not
/// closed in its divisible hull; ResidueLimitPoint iff k is not declared
/// real closed (rational-based fields are dense in their real closures).
bool caseAvailable(const CoeffField& k, const GroupDescriptor& G, CaseTag c);

/// Builds a standard cut for the case. Throws std::domain_error when the
/// case is unavailable. Discrete: g0 = (1/2) at the last index.
/// GroupLimitPoint: g0 = 1/q at the last index, q the least prime missing
/// from the last component. ResidueLimitPoint: a = sqrt(d) for the field's
/// radicand (sqrt(2) over plain rationals).
CutPoint makeCut(const CoeffField& k, const GroupDescriptor& G, CaseTag c);

/// Membership in D: for a group cut, x = 0 or (x > 0 and vmin(x) > g0 in
/// div(G)); for a residue cut, vmin(x) >= 0 and a - 1 < residue(x) < a.
bool memberDs(const Series& x, const CutPoint& cut);

/// Membership in the valuation ring O built from the cut: vmin(x) >= 0.
bool memberOs(const Series& x, const CutPoint& cut);

/// Certificate that x violates the stabilizer property behind O. For a
/// group cut (requires memberOs false): returns y = t^g1 in D with
/// vmin(x) + g1 not above g0, so x*y escapes D. For a residue cut (requires
/// |x| positive and non-infinitesimal): returns a constant b in (a - c, a)
/// with |x| + b outside (a - 1, a). Throws std::domain_error when no
/// violation exists.
Series osViolationWitness(const Series& x, const CutPoint& cut);

/// Condition (4.1): vmin(x) + vmin(y) > g0, with vmin(0) treated as
/// infinity. Requires y in D (std::domain_error otherwise).
bool checkCondition41(const Series& x, const Series& y, const GroupCut& cut);

/// The square-difference ordering formula: x = 0, or some y has
/// vmin(x - y^2) > vmin(x). Decided by leading-term analysis: the leading
/// coefficient must be a square in k and the leading exponent 2-divisible
/// in G.
bool phiHolds(const Series& x);

/// The y behind phiHolds, via truncated square root of the leading part;
/// vmin(x - y^2) > vmin(x) holds exactly. Requires phiHolds(x) and x != 0.
TruncatedResult phiWitness(const Series& x, long nTerms);

}  // namespace ordval
