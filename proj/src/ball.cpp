#include "fibtheta/ball.hpp"

#include "fibtheta/errors.hpp"

#include <cassert>

namespace fibtheta {

namespace {

// Tight rational bracket for sqrt5, shared by all magnitude bounds.
const Rat& sqrt5_upper_32() {
    static const Rat hi = [] {
        Ball s = sqrt5_enclosure(32);
        return s.center.a + s.radius;
    }();
    return hi;
}

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

} // namespace

Ball::Ball(QuadElem c, Rat r) : center(std::move(c)), radius(std::move(r)) {
    if (radius < 0) throw DomainError("Ball: negative radius");
}

Ball operator+(const Ball& x, const Ball& y) {
    return Ball(x.center + y.center, x.radius + y.radius);
}

Ball operator-(const Ball& x, const Ball& y) {
    return Ball(x.center - y.center, x.radius + y.radius);
}

Ball operator-(const Ball& x) { return Ball(-x.center, x.radius); }

Ball operator*(const Ball& x, const Ball& y) {
    QuadElem c = x.center * y.center;
    if (x.radius == 0 && y.radius == 0) return Ball(std::move(c), Rat(0));
    Rat r = upper_abs_bound(x.center) * y.radius + upper_abs_bound(y.center) * x.radius +
            x.radius * y.radius;
    return Ball(std::move(c), coarse_upper(r));
}

Ball scale(const Ball& x, const QuadElem& s) {
    if (x.radius == 0) return Ball(x.center * s, Rat(0));
    return Ball(x.center * s, coarse_upper(upper_abs_bound(s) * x.radius));
}

Ball scale(const Ball& x, const Rat& s) {
    return Ball(x.center * s, x.radius * abs_rat(s));
}

Ball recip(const Ball& x) {
    int slo = sign(x.lower());
    int shi = sign(x.upper());
    if (slo <= 0 && shi >= 0)
        throw DomainError("recip: enclosure not certified away from zero");
    // 1/[c-r, c+r] = [1/(c+r), 1/(c-r)] with exact midpoint c/(c^2 - r^2)
    // and half-width r/(c^2 - r^2); the radius uses a rational lower bound
    // on the (positive) denominator.
    QuadElem c = x.center;
    Rat r = x.radius;
    QuadElem denom = c * c - QuadElem(r * r);
    QuadElem mid = c / denom;
    if (r == 0) return Ball(std::move(mid), Rat(0));
    int digits = 32;
    for (;;) {
        auto [dlo, dhi] = rational_bounds(denom, digits);
        (void)dhi;
        if (dlo > 0) return Ball(std::move(mid), coarse_upper(r / dlo));
        digits *= 2;
        if (digits > 1 << 20) throw PrecisionError("recip: cannot bound denominator");
    }
}

Ball operator/(const Ball& x, const Ball& y) { return x * recip(y); }

Ball pow(const Ball& x, unsigned long e) {
    Ball acc = Ball::exact(QuadElem(1));
    Ball base = x;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Ball ball_round(const Ball& x, int mantissa_bits) {
    if (mantissa_bits < 8) throw UsageError("ball_round: mantissa_bits must be >= 8");
    auto round_component = [&](const Rat& v) -> Rat {
        if (v == 0) return v;
        long k = mantissa_bits - mag_exponent(v);
        return dyadic_round(v, k);
    };
    Rat a2 = round_component(x.center.a);
    Rat b2 = round_component(x.center.b);
    if (a2 == x.center.a && b2 == x.center.b) return x;
    Rat err = abs_rat(a2 - x.center.a) + abs_rat(b2 - x.center.b) * sqrt5_upper_32();
    return Ball(QuadElem(std::move(a2), std::move(b2)), coarse_upper(x.radius + err));
}

bool contains(const Ball& x, const QuadElem& v) {
    QuadElem d = x.center - v;
    return sign(d - x.radius) <= 0 && sign(d + x.radius) >= 0;
}

bool disjoint(const Ball& x, const Ball& y) {
    return x.upper() < y.lower() || y.upper() < x.lower();
}

bool overlaps(const Ball& x, const Ball& y) { return !disjoint(x, y); }

Rat upper_abs_bound(const QuadElem& x) {
    return abs_rat(x.a) + abs_rat(x.b) * sqrt5_upper_32();
}

Rat upper_abs_bound(const Ball& x) { return upper_abs_bound(x.center) + x.radius; }

std::pair<Rat, Rat> rational_bounds(const QuadElem& x, int digits) {
    if (x.b == 0) return {x.a, x.a};
    long bmag = static_cast<long>(mpz_sizeinbase(x.b.get_num().get_mpz_t(), 10)) -
                static_cast<long>(mpz_sizeinbase(x.b.get_den().get_mpz_t(), 10));
    if (bmag < 0) bmag = 0;
    int k = digits + static_cast<int>(bmag) + 2;
    Ball s5 = sqrt5_enclosure(k);
    Rat s5lo = s5.center.a - s5.radius;
    Rat s5hi = s5.center.a + s5.radius;
    if (x.b > 0) return {x.a + x.b * s5lo, x.a + x.b * s5hi};
    return {x.a + x.b * s5hi, x.a + x.b * s5lo};
}

std::pair<Rat, Rat> rational_bounds(const Ball& x, int digits) {
    auto [lo, hi] = rational_bounds(x.center, digits);
    return {lo - x.radius, hi + x.radius};
}

Rat gap_upper_bound(const Ball& x, const Ball& y) {
    return coarse_upper(upper_abs_bound(x.center - y.center) + x.radius + y.radius);
}

Rat gap_lower_bound(const Ball& x, const Ball& y) {
    QuadElem d = abs(x.center - y.center);
    auto [lo, hi] = rational_bounds(d, 48);
    (void)hi;
    Rat g = lo - x.radius - y.radius;
    return g < 0 ? Rat(0) : g;
}

Ball sqrt5_enclosure(int precision_digits) {
    return sqrt_enclosure(Rat(5), precision_digits);
}

Ball sqrt_enclosure(const Rat& x, int precision_digits) {
    if (precision_digits < 1) throw UsageError("sqrt_enclosure: precision_digits must be >= 1");
    if (x < 0) throw DomainError("sqrt_enclosure: negative argument");
    if (x == 0) return Ball::exact(Rat(0));
    const Int& n = x.get_num();
    const Int& m = x.get_den();
    Int p = pow10z(static_cast<unsigned long>(precision_digits));
    // sqrt(n/m) = sqrt(n*m)/m; bracket the integer root at scale 10^d.
    Int t = isqrt_floor(n * m * p * p);
    Int den = m * p;
    Rat center(2 * t + 1, 2 * den);
    center.canonicalize();
    Rat radius(1, 2 * den);
    radius.canonicalize();
    return Ball(QuadElem(center), radius);
}

Ball fourth_root_enclosure(const Ball& x, int precision_digits) {
    if (precision_digits < 1)
        throw UsageError("fourth_root_enclosure: precision_digits must be >= 1");
    if (sign(x.lower()) <= 0)
        throw DomainError("fourth_root_enclosure: enclosure not certified positive");

    Rat target = pow10q(-precision_digits);
    int digits = precision_digits + 4;
    for (int attempt = 0; attempt < 6; ++attempt, digits *= 2) {
        auto [lo, hi] = rational_bounds(x, digits);
        if (lo <= 0) continue; // approximation too coarse, refine
        Rat step = pow10q(-(precision_digits + 1));

        // Largest dyadic A with A^4 <= lo.
        Rat A(0), B = hi < 1 ? Rat(1) : hi;
        while (B - A > step) {
            Rat m = (A + B) / 2;
            Rat m4 = m * m * m * m;
            if (m4 <= lo)
                A = m;
            else
                B = m;
        }
        // Smallest dyadic D with D^4 >= hi.
        Rat C(0), D = hi < 1 ? Rat(1) : hi;
        while (D - C > step) {
            Rat m = (C + D) / 2;
            Rat m4 = m * m * m * m;
            if (m4 >= hi)
                D = m;
            else
                C = m;
        }
        // [A, D] contains [lo^(1/4), hi^(1/4)] and hence x^(1/4).
        Rat radius = (D - A) / 2;
        if (radius < target) return Ball(QuadElem((A + D) / 2), radius);
        // Input ball too wide relative to the request; only a tighter
        // conversion of the same ball can help. Retry, then give up.
    }
    throw PrecisionError("fourth_root_enclosure: input ball too wide for target radius");
}

namespace {

// Exact floor of a field element; terminates because a + b*sqrt5 with
// b != 0 is irrational.
Int floor_quad(const QuadElem& x) {
    if (x.b == 0) return floor_rat(x.a);
    int digits = 32;
    for (;;) {
        auto [lo, hi] = rational_bounds(x, digits);
        Int flo = floor_rat(lo);
        Int fhi = floor_rat(hi);
        if (flo == fhi) return flo;
        digits *= 2;
        if (digits > 1 << 22) throw Error("floor_quad: no separation");
    }
}

} // namespace

Rendered render_decimal(const Ball& x, int digits) {
    if (digits < 1) throw UsageError("render_decimal: digits must be >= 1");
    Int p = pow10z(static_cast<unsigned long>(digits));
    QuadElem av = abs(x.center);
    Int scaled = floor_quad(av * Rat(p));
    Int ip = scaled / p;
    Int fp = scaled % p;
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    std::string text;
    if (sign(x.center) < 0 && scaled != 0) text += '-';
    text += ip.get_str();
    text += '.';
    text += frac;
    bool certified = x.radius * 2 < pow10q(-digits);
    return {text, certified};
}

} // namespace fibtheta
