#include "ordval/numeric.hpp"

#include <cctype>
#include <cstdlib>

namespace ordval {

Rat rat(long n, long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

Rat rat(const Int& n, const Int& d) {
    if (sgn(d) == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(n);
    q /= Rat(d);
    return q;
}

Int floorRat(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

std::optional<Rat> ratSqrt(const Rat& q) {
    if (sgn(q) < 0) return std::nullopt;
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return rat(rn, rd);
}

std::string ratStr(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parseRat(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    Rat q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    if (sgn(Rat(q.get_den())) == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

QuadExt::QuadExt(long d_, Rat u_, Rat v_) : d(d_), u(std::move(u_)), v(std::move(v_)) {
    if (sgn(v) == 0) {
        d = 0;
        v = 0;
    } else if (d < 2) {
        throw std::invalid_argument("QuadExt radicand must be a squarefree integer >= 2");
    }
}

QuadExt quadSqrtD(long d) { return QuadExt(d, Rat(0), Rat(1)); }

namespace {

// Resolves the common radicand of two operands, throwing on a genuine clash.
long commonD(const QuadExt& x, const QuadExt& y) {
    if (x.d == 0) return y.d;
    if (y.d == 0 || y.d == x.d) return x.d;
    throw std::invalid_argument("QuadExt operands over different radicands");
}

QuadExt make(long d, Rat u, Rat v) {
    if (sgn(v) == 0) return QuadExt(std::move(u));
    return QuadExt(d, std::move(u), std::move(v));
}

}  // namespace

QuadExt qextNeg(const QuadExt& x) { return make(x.d, -x.u, -x.v); }

QuadExt qextArith(const QuadExt& x, const QuadExt& y, ArithOp op) {
    long d = commonD(x, y);
    switch (op) {
        case ArithOp::Add:
            return make(d, x.u + y.u, x.v + y.v);
        case ArithOp::Sub:
            return make(d, x.u - y.u, x.v - y.v);
        case ArithOp::Mul:
            return make(d, x.u * y.u + x.v * y.v * d, x.u * y.v + x.v * y.u);
        case ArithOp::Div: {
            if (y.isZero()) throw std::domain_error("QuadExt division by zero");
            // 1/(u+v sqrt d) = (u - v sqrt d)/(u^2 - v^2 d)
            Rat norm = y.u * y.u - y.v * y.v * d;
            QuadExt conj = make(d, y.u / norm, -y.v / norm);
            return qextArith(x, conj, ArithOp::Mul);
        }
    }
    throw std::logic_error("unreachable");
}

int qextSign(const QuadExt& x) {
    int su = sgn(x.u), sv = sgn(x.v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // u and v disagree: |u| vs |v|*sqrt(d), compare squares.
    int c = cmp(x.u * x.u, x.v * x.v * x.d);
    if (c == 0) return 0;  // cannot happen for squarefree d >= 2, kept for safety
    return c > 0 ? su : sv;
}

int qextCmp(const QuadExt& x, const QuadExt& y) {
    return qextSign(qextArith(x, y, ArithOp::Sub));
}

std::optional<QuadExt> qextSqrtIfSquare(const QuadExt& x, long ambientD) {
    long d = ambientD >= 0 ? (x.d != 0 ? x.d : ambientD) : x.d;
    if (x.d != 0 && ambientD > 0 && x.d != ambientD)
        throw std::invalid_argument("QuadExt value outside the ambient extension");
    if (qextSign(x) < 0) return std::nullopt;
    if (x.isZero()) return QuadExt(Rat(0));
    if (sgn(x.v) == 0) {
        if (auto r = ratSqrt(x.u)) return QuadExt(*r);
        if (d >= 2) {
            // u = (q*sqrt(d))^2 iff u/d is a rational square.
            if (auto r = ratSqrt(x.u / d)) return make(d, Rat(0), *r);
        }
        return std::nullopt;
    }
    // (p + q sqrt d)^2 = x forces p^2 + q^2 d = u, 2pq = v; p^2 is a root of
    // t^2 - u t + (v^2 d)/4, so u^2 - v^2 d must be a rational square w^2.
    auto w = ratSqrt(x.u * x.u - x.v * x.v * d);
    if (!w) return std::nullopt;
    for (int side = 0; side < 2; ++side) {
        Rat p2 = (side == 0 ? Rat(x.u + *w) : Rat(x.u - *w)) / 2;
        auto p = ratSqrt(p2);
        if (!p || sgn(*p) == 0) continue;
        Rat q = x.v / (2 * *p);
        QuadExt y = make(d, *p, q);
        if (qextSign(y) < 0) y = qextNeg(y);
        if (qextArith(y, y, ArithOp::Mul) == make(d, x.u, x.v)) return y;
    }
    return std::nullopt;
}

Rat rationalInInterval(const QuadExt& lo, const QuadExt& hi) {
    if (qextCmp(lo, hi) >= 0) throw std::domain_error("rationalInInterval: empty interval");
    // Integer bracket by exact sign tests, then bisection.
    Rat a(0), b(0);
    Rat step(1);
    while (qextCmp(QuadExt(a), lo) > 0) {
        a -= step;
        step *= 2;
    }
    step = 1;
    while (qextCmp(QuadExt(b), hi) < 0) {
        b += step;
        step *= 2;
    }
    for (;;) {
        Rat m = (a + b) / 2;
        int cl = qextCmp(QuadExt(m), lo);
        if (cl <= 0) {
            a = m;
            continue;
        }
        if (qextCmp(QuadExt(m), hi) >= 0) {
            b = m;
            continue;
        }
        return m;
    }
}

std::string qextStr(const QuadExt& x) {
    if (sgn(x.v) == 0) return ratStr(x.u);
    std::string rad = ratStr(x.v) + "*sqrt(" + std::to_string(x.d) + ")";
    if (sgn(x.u) == 0) return rad;
    return ratStr(x.u) + " + " + rad;
}

namespace {

struct QextScan {
    const std::string& s;
    size_t i = 0;
    explicit QextScan(const std::string& t) : s(t) {}
    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool lit(const char* w) {
        ws();
        size_t n = std::string(w).size();
        if (s.compare(i, n, w) == 0) {
            i += n;
            return true;
        }
        return false;
    }
    Rat number() {
        ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '/')) ++i;
        if (i == start) throw std::invalid_argument("malformed rational in: " + s);
        return parseRat(s.substr(start, i - start));
    }
};

}  // namespace

QuadExt parseQuadExt(const std::string& text) {
    QextScan sc(text);
    Rat u(0), v(0);
    long d = 0;
    auto term = [&](int sign) {
        Rat c(1);
        bool haveC = false;
        sc.ws();
        if (sc.i < sc.s.size() && sc.s[sc.i] != 's') {
            c = sc.number();
            haveC = true;
        }
        if ((haveC ? sc.lit("*sqrt(") : sc.lit("sqrt("))) {
            Rat rd = sc.number();
            if (!sc.lit(")")) throw std::invalid_argument("expected ')' in: " + text);
            if (rd.get_den() != 1 || rd < 2)
                throw std::invalid_argument("radicand must be an integer >= 2: " + text);
            long dd = rd.get_num().get_si();
            if (d != 0 && d != dd) throw std::invalid_argument("mixed radicands in: " + text);
            d = dd;
            v += sign * c;
        } else {
            u += sign * c;
        }
    };
    term(1);
    sc.ws();
    while (sc.i < sc.s.size()) {
        int sign;
        if (sc.lit("+"))
            sign = 1;
        else if (sc.lit("-"))
            sign = -1;
        else
            throw std::invalid_argument("trailing characters in: " + text);
        term(sign);
        sc.ws();
    }
    if (sgn(v) == 0) return QuadExt(u);
    return QuadExt(d, u, v);
}

}  // namespace ordval
