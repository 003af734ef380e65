#include "fibtheta/quad.hpp"

#include "fibtheta/errors.hpp"

#include <ostream>

namespace fibtheta {

bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.a == y.a && x.b == y.b;
}

bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    return {x.a + y.a, x.b + y.b};
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    return {x.a - y.a, x.b - y.b};
}

QuadElem operator-(const QuadElem& x) { return {-x.a, -x.b}; }

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadElem inverse(const QuadElem& x) {
    if (x.is_zero()) throw DomainError("QuadElem: division by zero");
    Rat n = x.norm();
    // norm = 0 with (a,b) != 0 would mean sqrt5 rational
    return {x.a / n, -x.b / n};
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) {
    return x * inverse(y);
}

QuadElem operator*(const QuadElem& x, const Rat& s) { return {x.a * s, x.b * s}; }
QuadElem operator+(const QuadElem& x, const Rat& s) { return {x.a + s, x.b}; }
QuadElem operator-(const QuadElem& x, const Rat& s) { return {x.a - s, x.b}; }

QuadElem pow(const QuadElem& x, long e) {
    QuadElem base = x;
    if (e < 0) {
        base = inverse(x);
        e = -e;
    }
    QuadElem acc(Rat(1), Rat(0));
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int sign(const QuadElem& x) {
    int sa = sgn(x.a);
    int sb = sgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Components disagree: a + b*sqrt5 > 0 iff the larger magnitude wins,
    // i.e. compare a^2 against 5 b^2.
    Rat d = x.a * x.a - 5 * x.b * x.b;
    int sd = sgn(d);
    return sa > 0 ? sd : -sd;
}

bool operator<(const QuadElem& x, const QuadElem& y) { return sign(x - y) < 0; }
bool operator<=(const QuadElem& x, const QuadElem& y) { return sign(x - y) <= 0; }
bool operator>(const QuadElem& x, const QuadElem& y) { return sign(x - y) > 0; }
bool operator>=(const QuadElem& x, const QuadElem& y) { return sign(x - y) >= 0; }

QuadElem abs(const QuadElem& x) { return sign(x) < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
    os << x.a;
    if (x.b != 0) {
        os << (x.b > 0 ? " + " : " - ");
        Rat ab = ::abs(x.b);
        if (ab != 1) os << ab << "*";
        os << "sqrt5";
    }
    return os;
}

} // namespace fibtheta
