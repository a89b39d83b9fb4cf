/**
 * @file series.hpp
 * @brief Finitely supported Hahn series over a coefficient field and an
 *        ordered abelian group, with exact ring/order operations and
 *        term-count-truncated inversion and square root.
 *
 * A series is a finite sum of terms c * t^g with g in G and c in k. Terms
 * are kept sorted by strictly increasing exponent with no zero coefficients.
 * The ordering is sign-of-leading-coefficient; the valuation vmin is the
 * least exponent. Truncations are by term count, not by exponent cutoff:
 * in non-archimedean groups infinitely many expansion exponents can lie
 * below a fixed exponent, so a count bound is the only total policy.
 */
#pragma once

#include "ordval/groups.hpp"

namespace ordval {

/// Coefficient field: Q, Q(sqrt(d)), either optionally tagged as real
/// closed. The tag drives classification only; coefficient arithmetic is
/// always performed in the base field.
struct CoeffField {
    enum class Kind { PlainRationals, QuadraticExt };
    Kind kind = Kind::PlainRationals;
    long d = 0;  // QuadraticExt: squarefree radicand >= 2
    bool declaredRealClosed = false;

    static CoeffField rationals() { return {}; }
    static CoeffField quadratic(long d);
    static CoeffField realClosed(CoeffField base) {
        base.declaredRealClosed = true;
        return base;
    }

    /// True iff c is a value of this field (matching or absent radical).
    bool admits(const QuadExt& c) const { return c.d == 0 || (kind == Kind::QuadraticExt && c.d == d); }
    bool operator==(const CoeffField&) const = default;
};

struct Series {
    CoeffField field;
    GroupDescriptor group;
    /// Sorted by strictly increasing exponent; no zero coefficients.
    std::vector<std::pair<HullElement, QuadExt>> terms;

    Series(CoeffField f, GroupDescriptor g) : field(std::move(f)), group(std::move(g)) {}
    /// Normalizing constructor: merges equal exponents, drops zeros, checks
    /// that every exponent lies in the group and every coefficient in the
    /// field (std::invalid_argument otherwise).
    Series(CoeffField f, GroupDescriptor g, std::vector<std::pair<HullElement, QuadExt>> ts);

    bool isZero() const { return terms.empty(); }
    bool sameContext(const Series& o) const { return field == o.field && group == o.group; }
};

/// c * t^g.
Series sMonomial(const CoeffField& f, const GroupDescriptor& g, const QuadExt& c,
                 const HullElement& e);
/// Constant series c = c * t^0.
Series sConst(const CoeffField& f, const GroupDescriptor& g, const QuadExt& c);

Series sAdd(const Series& x, const Series& y);
Series sNeg(const Series& x);
Series sSub(const Series& x, const Series& y);
Series sMul(const Series& x, const Series& y);

/// Sign of x - y: the sign (via qextSign) of the leading coefficient of the
/// difference. Returns <0, 0, >0.
int sCmp(const Series& x, const Series& y);
inline int sSign(const Series& x) { return x.isZero() ? 0 : qextSign(x.terms.front().second); }

/// Least exponent; empty for the zero series (vmin = infinity).
std::optional<HullElement> sVmin(const Series& x);
/// Leading coefficient. Throws std::domain_error on zero.
const QuadExt& sLeadCoeff(const Series& x);

/// Coefficient at exponent 0. Requires vmin(x) >= 0 (x in the valuation
/// ring); throws std::domain_error otherwise.
QuadExt sResidue(const Series& x);

/// Truncated result of an inversion or square root: the first terms of the
/// exact expansion plus an exponent bound below which the result is exact.
struct TruncatedResult {
    Series terms;
    /// For inversion: vmin(x*terms - 1) > guarantee; for square root:
    /// vmin(x - terms^2) > guarantee. Always an element of G.
    HullElement guarantee;
    /// True when the expansion terminated: the remainder is exactly zero.
    bool exact = false;
};

/// First nTerms terms of 1/x, by leading-monomial normalization and
/// iterated correction. Requires x != 0 (std::domain_error) and nTerms >= 1.
TruncatedResult truncInverse(const Series& x, long nTerms);

/// First nTerms terms of sqrt(x). Requires x > 0, the leading exponent
/// 2-divisible in G and the leading coefficient a square in k
/// (std::domain_error otherwise).
TruncatedResult truncSqrt(const Series& x, long nTerms);

/// Canonical literal, e.g. "1*t^({}) + -1/2*t^({1: 1})"; "0" for zero.
std::string seriesStr(const Series& x);

}  // namespace ordval
