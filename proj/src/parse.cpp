#include "ordval/parse.hpp"

#include <cctype>

namespace ordval {

namespace {

class Scanner {
  public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skipWs() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }
    size_t pos() {
        skipWs();
        return pos_;
    }
    bool atEnd() {
        skipWs();
        return pos_ == text_.size();
    }
    char peek() {
        skipWs();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool tryEat(char c) {
        skipWs();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void eat(char c) {
        if (!tryEat(c)) fail(std::string("expected '") + c + "'");
    }
    bool tryEatWord(const std::string& w) {
        skipWs();
        if (text_.compare(pos_, w.size(), w) != 0) return false;
        size_t after = pos_ + w.size();
        if (after < text_.size() && (std::isalnum((unsigned char)text_[after]) || text_[after] == '_'))
            return false;  // longer identifier
        pos_ = after;
        return true;
    }
    long integer() {
        skipWs();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
        if (pos_ == digits) fail("expected an integer", start);
        try {
            return std::stol(text_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            fail("integer out of range", start);
        }
        return 0;
    }
    Rat rational() {
        long n = integer();
        if (tryEat('/')) {
            size_t dpos = pos();
            long d = integer();
            if (d == 0) fail("zero denominator", dpos);
            return rat(n, d);
        }
        return rat(n);
    }
    /// Raw text until the matching close of an already-consumed '('.
    std::string parenBody() {
        size_t depth = 1, start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '(') ++depth;
            if (c == ')' && --depth == 0) {
                std::string body = text_.substr(start, pos_ - start);
                ++pos_;
                return body;
            }
            ++pos_;
        }
        fail("unbalanced parentheses", start);
        return {};
    }
    void expectEnd() {
        if (!atEnd()) fail("unexpected trailing input");
    }
    [[noreturn]] void fail(const std::string& msg) { fail(msg, pos()); }
    [[noreturn]] void fail(const std::string& msg, size_t at) { throw ParseError(msg, at); }

  private:
    const std::string& text_;
    size_t pos_ = 0;
};

RationalSubgroup component(Scanner& s);
GroupDescriptor group(Scanner& s);

RationalSubgroup component(Scanner& s) {
    size_t at = s.pos();
    if (s.tryEatWord("Z")) return subZ();
    if (s.tryEatWord("Q")) return subQ();
    if (s.tryEatWord("loc")) {
        s.eat('{');
        if (s.tryEat('>')) {
            s.eat('=');
            size_t pat = s.pos();
            long p = s.integer();
            if (!isPrime(p)) s.fail("bound must be prime", pat);
            s.eat('}');
            return subLocAtLeast(p);
        }
        std::vector<long> ps;
        do {
            size_t pat = s.pos();
            long p = s.integer();
            if (!isPrime(p)) s.fail("localizer must be prime", pat);
            ps.push_back(p);
        } while (s.tryEat(','));
        s.eat('}');
        try {
            return subLoc(std::move(ps));
        } catch (const std::invalid_argument& e) {
            s.fail(e.what(), at);
        }
    }
    s.fail("expected a component (Z, Q or loc{...})", at);
}

ComponentRule rule(Scanner& s) {
    size_t at = s.pos();
    if (s.tryEatWord("const")) {
        s.eat('(');
        RationalSubgroup c = component(s);
        s.eat(')');
        return ConstantRule{c};
    }
    if (s.tryEatWord("prefixprimes")) {
        long off = 0;
        if (s.tryEat('(')) {
            size_t oat = s.pos();
            off = s.integer();
            if (off < 0) s.fail("offset must be nonnegative", oat);
            s.eat(')');
        }
        return PrefixPrimesRule{off};
    }
    s.fail("expected a component rule (const(...) or prefixprimes)", at);
}

GroupDescriptor group(Scanner& s) {
    size_t at = s.pos();
    if (s.tryEatWord("0")) return GroupDescriptor::finiteLex({});
    if (s.tryEatWord("lex")) {
        s.eat('(');
        std::vector<RationalSubgroup> comps;
        do {
            size_t gat = s.pos();
            GroupDescriptor g = group(s);
            if (g.shape != GroupDescriptor::Shape::FiniteLex)
                s.fail("only finite sums may nest inside lex", gat);
            for (auto& c : g.comps) comps.push_back(std::move(c));
        } while (s.tryEat(','));
        s.eat(')');
        return GroupDescriptor::finiteLex(std::move(comps));
    }
    if (s.tryEatWord("omega")) {
        s.eat('(');
        ComponentRule r = rule(s);
        s.eat(')');
        return GroupDescriptor::omegaLex(std::move(r));
    }
    if (s.tryEatWord("omegaplus1")) {
        s.eat('(');
        ComponentRule r = rule(s);
        s.eat(',');
        RationalSubgroup top = component(s);
        s.eat(')');
        return GroupDescriptor::omegaPlusOneLex(std::move(r), std::move(top));
    }
    (void)at;
    return GroupDescriptor::finiteLex({component(s)});
}

HullElement element(Scanner& s) {
    s.eat('{');
    std::vector<std::pair<Idx, Rat>> terms;
    if (!s.tryEat('}')) {
        do {
            Idx i;
            if (s.tryEatWord("top")) {
                i = Idx::topIndex();
            } else {
                size_t iat = s.pos();
                long n = s.integer();
                if (n < 1) s.fail("index must be >= 1", iat);
                i = Idx::finite(n);
            }
            s.eat(':');
            Rat c = s.rational();
            terms.emplace_back(i, c);
        } while (s.tryEat(','));
        s.eat('}');
    }
    return hullFrom(std::move(terms));
}

CoeffField coeff(Scanner& s) {
    size_t at = s.pos();
    if (s.tryEatWord("rc")) {
        s.eat('(');
        CoeffField base = coeff(s);
        s.eat(')');
        if (base.declaredRealClosed) s.fail("nested rc(...)", at);
        return CoeffField::realClosed(base);
    }
    if (s.tryEatWord("quad")) {
        s.eat('(');
        size_t dat = s.pos();
        long d = s.integer();
        s.eat(')');
        try {
            return CoeffField::quadratic(d);
        } catch (const std::invalid_argument& e) {
            s.fail(e.what(), dat);
        }
    }
    if (s.tryEatWord("Q")) return CoeffField::rationals();
    s.fail("expected a coefficient field (Q, quad(d) or rc(...))", at);
}

QuadExt coeffValue(Scanner& s) {
    if (s.tryEat('(')) {
        size_t at = s.pos();
        std::string body = s.parenBody();
        try {
            return parseQuadExt(body);
        } catch (const std::invalid_argument& e) {
            s.fail(e.what(), at);
        }
    }
    return QuadExt(s.rational());
}

HullElement exponent(Scanner& s) {
    if (!(s.tryEatWord("t") && s.tryEat('^')))
        s.fail("expected t^(element)");
    s.eat('(');
    HullElement e = element(s);
    s.eat(')');
    return e;
}

}  // namespace

GroupDescriptor parseGroup(const std::string& text) {
    Scanner s(text);
    GroupDescriptor g = group(s);
    s.expectEnd();
    return g;
}

HullElement parseElement(const std::string& text) {
    Scanner s(text);
    HullElement e = element(s);
    s.expectEnd();
    return e;
}

CoeffField parseCoeffField(const std::string& text) {
    Scanner s(text);
    CoeffField k = coeff(s);
    s.expectEnd();
    return k;
}

Series parseSeries(const std::string& text, const CoeffField& k, const GroupDescriptor& G) {
    Scanner s(text);
    std::vector<std::pair<HullElement, QuadExt>> terms;
    if (!(s.peek() == '0' && [&] {
            Scanner probe = s;  // lone "0" means the zero series
            return probe.tryEatWord("0") && probe.atEnd();
        }())) {
        do {
            size_t at = s.pos();
            QuadExt c{rat(1)};
            if (s.peek() != 't') {  // a bare t^(...) term means coefficient 1
                c = coeffValue(s);
                s.eat('*');
            }
            HullElement e = exponent(s);
            if (!k.admits(c)) s.fail("coefficient outside the field", at);
            bool inG = false;
            try {
                inG = gMember(e, G);
            } catch (const std::out_of_range&) {
                s.fail("exponent index outside the group's index set", at);
            }
            if (!inG) s.fail("exponent outside the group", at);
            terms.emplace_back(std::move(e), std::move(c));
        } while (s.tryEat('+'));
        s.expectEnd();
    }
    return Series(k, G, std::move(terms));
}

CutPoint parseCut(const std::string& text, const GroupDescriptor& G) {
    Scanner s(text);
    if (s.peek() == 't') {
        size_t at = s.pos();
        HullElement g0 = exponent(s);
        s.expectEnd();
        try {
            return GroupCut(std::move(g0), G);
        } catch (const std::invalid_argument& e) {
            s.fail(e.what(), at);
        } catch (const std::out_of_range& e) {
            s.fail(e.what(), at);
        }
    }
    try {
        return ResidueCut(parseQuadExt(text));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string cutStr(const CutPoint& cut) {
    if (const auto* gc = std::get_if<GroupCut>(&cut)) return "t^(" + hullStr(gc->g0) + ")";
    return qextStr(std::get<ResidueCut>(cut).a);
}

}  // namespace ordval
