#ifndef FIBTHETA_QUAD_HPP
#define FIBTHETA_QUAD_HPP

#include "fibtheta/rational.hpp"

#include <iosfwd>

namespace fibtheta {

/// Exact element a + b*sqrt(5) of the real quadratic field Q(sqrt5).
/// The pair (a, b) determines the value uniquely (sqrt5 is irrational),
/// so equality of values is equality of components.
struct QuadElem {
    Rat a;
    Rat b;

    QuadElem() : a(0), b(0) {}
    QuadElem(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit QuadElem(const Rat& rational) : a(rational), b(0) {}
    explicit QuadElem(long v) : a(v), b(0) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    /// a - b*sqrt5; satisfies x*conj(x) = a^2 - 5 b^2 exactly.
    QuadElem conj() const { return {a, -b}; }

    /// The rational norm a^2 - 5 b^2.
    Rat norm() const { return a * a - 5 * b * b; }

    static QuadElem sqrt5() { return {Rat(0), Rat(1)}; }
    /// Golden ratio (1 + sqrt5)/2.
    static QuadElem alpha() { return {Rat(1, 2), Rat(1, 2)}; }
    /// 1/alpha = (sqrt5 - 1)/2, the nome used throughout.
    static QuadElem beta() { return {Rat(-1, 2), Rat(1, 2)}; }
};

bool operator==(const QuadElem& x, const QuadElem& y);
bool operator!=(const QuadElem& x, const QuadElem& y);

QuadElem operator+(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x);
// (a+b sqrt5)(c+d sqrt5) = (ac+5bd) + (ad+bc) sqrt5
QuadElem operator*(const QuadElem& x, const QuadElem& y);
/// Division multiplies by the conjugate; throws DomainError on y == 0.
QuadElem operator/(const QuadElem& x, const QuadElem& y);

QuadElem operator*(const QuadElem& x, const Rat& s);
QuadElem operator+(const QuadElem& x, const Rat& s);
QuadElem operator-(const QuadElem& x, const Rat& s);

/// Multiplicative inverse; throws DomainError on zero.
QuadElem inverse(const QuadElem& x);

/// x^e for any integer e (negative e inverts first).
QuadElem pow(const QuadElem& x, long e);

/// Exact sign of a + b*sqrt5: -1, 0, or +1. Decided by component signs,
/// falling back to comparing a^2 against 5 b^2 when they disagree.
int sign(const QuadElem& x);

bool operator<(const QuadElem& x, const QuadElem& y);
bool operator<=(const QuadElem& x, const QuadElem& y);
bool operator>(const QuadElem& x, const QuadElem& y);
bool operator>=(const QuadElem& x, const QuadElem& y);

QuadElem abs(const QuadElem& x);

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

} // namespace fibtheta

#endif
