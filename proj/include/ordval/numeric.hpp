/**
 * @file numeric.hpp
 * @brief Exact arithmetic over Q and over a single real quadratic extension Q(sqrt(d)).
 *
 * Rationals are GMP-backed and always kept in lowest terms with positive
 * denominator. A QuadExt value u + v*sqrt(d) is represented uniquely by the
 * pair (u, v) since sqrt(d) is irrational for squarefree d >= 2. Sign tests
 * and squareness tests are exact; nothing here touches floating point.
 */
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ordval {

using Rat = mpq_class;
using Int = mpz_class;

// ---- rational helpers ----

/// n/d in lowest terms. Throws on d == 0.
Rat rat(long n, long d = 1);
Rat rat(const Int& n, const Int& d);

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

/// Largest integer <= q.
Int floorRat(const Rat& q);

/// Exact square root if q is a square of a rational, otherwise empty.
std::optional<Rat> ratSqrt(const Rat& q);

/// Lowest-terms literal: "p/q", or just "p" when the denominator is 1.
std::string ratStr(const Rat& q);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rat parseRat(const std::string& text);

// ---- quadratic extension ----

/// u + v*sqrt(d). d == 0 marks a plain rational (no radical part); the
/// representation is canonical: v == 0 forces d == 0.
struct QuadExt {
    long d = 0;
    Rat u;
    Rat v;

    QuadExt() = default;
    QuadExt(Rat u_) : u(std::move(u_)) {}
    QuadExt(long d_, Rat u_, Rat v_);

    bool isRational() const { return d == 0; }
    bool isZero() const { return sgn(u) == 0 && sgn(v) == 0; }

    bool operator==(const QuadExt& o) const { return d == o.d && u == o.u && v == o.v; }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }
};

/// sqrt(d) in Q(sqrt(d)).
QuadExt quadSqrtD(long d);

enum class ArithOp { Add, Sub, Mul, Div };

/// Exact field arithmetic in Q(sqrt(d)). Operands must have matching d
/// (plain rationals mix with any d). Throws on division by zero.
QuadExt qextArith(const QuadExt& x, const QuadExt& y, ArithOp op);

QuadExt qextNeg(const QuadExt& x);

/// Sign of the real number u + v*sqrt(d), computed by comparing u^2 with
/// v^2*d when u and v disagree in sign.
int qextSign(const QuadExt& x);

/// Three-way order comparison; negative/zero/positive like strcmp.
int qextCmp(const QuadExt& x, const QuadExt& y);

/// y >= 0 with y^2 == x inside Q(sqrt(ambientD)), if such y exists.
/// ambientD supplies the extension when x itself is rational; pass 0 for
/// plain Q. For x = u + v*sqrt(d) with v != 0 the analysis reduces to
/// rational squareness of u^2 - v^2*d and then of (u +- w)/2.
std::optional<QuadExt> qextSqrtIfSquare(const QuadExt& x, long ambientD = -1);

/// A rational strictly inside (lo, hi), found by exact bisection from
/// integer bounds. Deterministic. Throws std::domain_error if lo >= hi.
Rat rationalInInterval(const QuadExt& lo, const QuadExt& hi);

/// Canonical literal, e.g. "3/2", "1 + 1*sqrt(2)", "-1/2*sqrt(3)".
std::string qextStr(const QuadExt& x);

/// Parses the output of qextStr (whitespace-insensitive).
QuadExt parseQuadExt(const std::string& text);

}  // namespace ordval
