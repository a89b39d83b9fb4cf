#include "ordval/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ordval {

CoeffField CoeffField::quadratic(long d) {
    if (d < 2) throw std::invalid_argument("quadratic radicand must be >= 2");
    for (long q = 2; q * q <= d; ++q)
        if (d % (q * q) == 0) throw std::invalid_argument("quadratic radicand must be squarefree");
    CoeffField f;
    f.kind = Kind::QuadraticExt;
    f.d = d;
    return f;
}

namespace {

struct HullLess {
    bool operator()(const HullElement& a, const HullElement& b) const {
        return hullCmp(a, b) < 0;
    }
};

void requireSameContext(const Series& x, const Series& y) {
    if (!x.sameContext(y)) throw std::invalid_argument("series descriptor mismatch");
}

QuadExt coeffAdd(const QuadExt& a, const QuadExt& b) { return qextArith(a, b, ArithOp::Add); }
QuadExt coeffMul(const QuadExt& a, const QuadExt& b) { return qextArith(a, b, ArithOp::Mul); }
QuadExt coeffDiv(const QuadExt& a, const QuadExt& b) { return qextArith(a, b, ArithOp::Div); }

Series fromMap(const CoeffField& f, const GroupDescriptor& g,
               std::map<HullElement, QuadExt, HullLess>&& acc) {
    Series z(f, g);
    for (auto& [e, c] : acc)
        if (!c.isZero()) z.terms.emplace_back(e, c);
    return z;
}

}  // namespace

Series::Series(CoeffField f, GroupDescriptor g, std::vector<std::pair<HullElement, QuadExt>> ts)
    : field(std::move(f)), group(std::move(g)) {
    std::map<HullElement, QuadExt, HullLess> acc;
    for (auto& [e, c] : ts) {
        if (!gMember(e, group)) throw std::invalid_argument("series exponent outside the group");
        if (!field.admits(c)) throw std::invalid_argument("series coefficient outside the field");
        auto it = acc.find(e);
        if (it == acc.end())
            acc.emplace(e, c);
        else
            it->second = coeffAdd(it->second, c);
    }
    for (auto& [e, c] : acc)
        if (!c.isZero()) terms.emplace_back(e, c);
}

Series sMonomial(const CoeffField& f, const GroupDescriptor& g, const QuadExt& c,
                 const HullElement& e) {
    return Series(f, g, {{e, c}});
}

Series sConst(const CoeffField& f, const GroupDescriptor& g, const QuadExt& c) {
    return sMonomial(f, g, c, HullElement{});
}

Series sAdd(const Series& x, const Series& y) {
    requireSameContext(x, y);
    Series z(x.field, x.group);
    size_t a = 0, b = 0;
    while (a < x.terms.size() || b < y.terms.size()) {
        int c = a == x.terms.size()   ? 1
                : b == y.terms.size() ? -1
                                      : hullCmp(x.terms[a].first, y.terms[b].first);
        if (c < 0)
            z.terms.push_back(x.terms[a++]);
        else if (c > 0)
            z.terms.push_back(y.terms[b++]);
        else {
            QuadExt s = coeffAdd(x.terms[a].second, y.terms[b].second);
            if (!s.isZero()) z.terms.emplace_back(x.terms[a].first, s);
            ++a, ++b;
        }
    }
    return z;
}

Series sNeg(const Series& x) {
    Series z = x;
    for (auto& [e, c] : z.terms) c = qextNeg(c);
    return z;
}

Series sSub(const Series& x, const Series& y) { return sAdd(x, sNeg(y)); }

Series sMul(const Series& x, const Series& y) {
    requireSameContext(x, y);
    std::map<HullElement, QuadExt, HullLess> acc;
    for (const auto& [ex, cx] : x.terms)
        for (const auto& [ey, cy] : y.terms) {
            HullElement e = hullAdd(ex, ey);
            QuadExt c = coeffMul(cx, cy);
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), std::move(c));
            else
                it->second = coeffAdd(it->second, c);
        }
    return fromMap(x.field, x.group, std::move(acc));
}

int sCmp(const Series& x, const Series& y) {
    requireSameContext(x, y);
    return sSign(sSub(x, y));
}

std::optional<HullElement> sVmin(const Series& x) {
    if (x.isZero()) return std::nullopt;
    return x.terms.front().first;
}

const QuadExt& sLeadCoeff(const Series& x) {
    if (x.isZero()) throw std::domain_error("zero series has no leading coefficient");
    return x.terms.front().second;
}

QuadExt sResidue(const Series& x) {
    if (!x.isZero() && hullSign(x.terms.front().first) < 0)
        throw std::domain_error("residue requires vmin(x) >= 0");
    for (const auto& [e, c] : x.terms)
        if (e.isZero()) return c;
    return QuadExt{};
}

TruncatedResult truncInverse(const Series& x, long nTerms) {
    if (x.isZero()) throw std::domain_error("cannot invert the zero series");
    if (nTerms < 1) throw std::domain_error("term count must be >= 1");
    const HullElement& g = x.terms.front().first;
    const QuadExt& c = x.terms.front().second;
    HullElement negG = hullNeg(g);
    Series y(x.field, x.group);
    Series one = sConst(x.field, x.group, QuadExt(rat(1)));
    HullElement lastExp;
    for (long k = 0; k < nTerms; ++k) {
        Series r = sSub(one, sMul(x, y));
        if (r.isZero()) {
            TruncatedResult res{std::move(y), hullAdd(lastExp, g), true};
            return res;
        }
        // Next correction: leading term of the remainder divided by the
        // leading term of x.
        lastExp = hullAdd(r.terms.front().first, negG);
        QuadExt coeff = coeffDiv(r.terms.front().second, c);
        y = sAdd(y, sMonomial(x.field, x.group, coeff, lastExp));
    }
    // Each step strictly raises vmin of the remainder past the exponent of
    // the term just emitted shifted by vmin(x).
    return TruncatedResult{std::move(y), hullAdd(lastExp, g), false};
}

TruncatedResult truncSqrt(const Series& x, long nTerms) {
    if (sSign(x) <= 0) throw std::domain_error("square root requires x > 0");
    if (nTerms < 1) throw std::domain_error("term count must be >= 1");
    const HullElement& g = x.terms.front().first;
    HullElement half = hullScale(g, rat(1, 2));
    if (!gMember(half, x.group))
        throw std::domain_error("leading exponent is not 2-divisible in the group");
    long ambient = x.field.kind == CoeffField::Kind::QuadraticExt ? x.field.d : 0;
    auto rootC = qextSqrtIfSquare(x.terms.front().second, ambient);
    if (!rootC) throw std::domain_error("leading coefficient is not a square in the field");

    Series y = sMonomial(x.field, x.group, *rootC, half);
    Series lead2 = sMonomial(x.field, x.group,
                             qextArith(QuadExt(rat(2)), *rootC, ArithOp::Mul), half);
    HullElement lastExp = half;
    for (long k = 1; k < nTerms; ++k) {
        Series r = sSub(x, sMul(y, y));
        if (r.isZero()) return TruncatedResult{std::move(y), hullAdd(lastExp, half), true};
        // Newton step on the leading term: tau = lead(r) / (2 * lead(y)).
        lastExp = hullSub(r.terms.front().first, half);
        QuadExt coeff = coeffDiv(r.terms.front().second, lead2.terms.front().second);
        y = sAdd(y, sMonomial(x.field, x.group, coeff, lastExp));
    }
    Series r = sSub(x, sMul(y, y));
    return TruncatedResult{std::move(y), hullAdd(lastExp, half), r.isZero()};
}

std::string seriesStr(const Series& x) {
    if (x.isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : x.terms) {
        if (!first) out << " + ";
        first = false;
        std::string cs = qextStr(c);
        if (!c.isRational()) cs = "(" + cs + ")";
        out << cs << "*t^(" << hullStr(e) << ")";
    }
    return out.str();
}

}  // namespace ordval
