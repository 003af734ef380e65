#ifndef FIBTHETA_BALL_HPP
#define FIBTHETA_BALL_HPP

#include "fibtheta/quad.hpp"

#include <string>
#include <utility>

namespace fibtheta {

/// Certified enclosure of a real number: the represented value lies in
/// [center - radius, center + radius]. Every operation below is sound:
/// the output ball contains every exact result reachable from points of
/// the input balls.
struct Ball {
    QuadElem center;
    Rat radius; // >= 0

    Ball() : center(), radius(0) {}
    Ball(QuadElem c, Rat r);

    static Ball exact(QuadElem c) { return Ball(std::move(c), Rat(0)); }
    static Ball exact(const Rat& c) { return Ball(QuadElem(c), Rat(0)); }

    QuadElem lower() const { return center - radius; }
    QuadElem upper() const { return center + radius; }

    bool is_exact() const { return radius == 0; }
};

Ball operator+(const Ball& x, const Ball& y);
Ball operator-(const Ball& x, const Ball& y);
Ball operator-(const Ball& x);
// radius: |c1| r2 + |c2| r1 + r1 r2, with |c| bounded via the cached
// sqrt5 enclosure.
Ball operator*(const Ball& x, const Ball& y);

/// Scale by an exact field element: center exact, radius |s|_upper * r.
Ball scale(const Ball& x, const QuadElem& s);
Ball scale(const Ball& x, const Rat& s);

/// Reciprocal of a ball certified away from zero (exact sign test on the
/// endpoints); throws DomainError when the enclosure touches zero.
Ball recip(const Ball& x);
Ball operator/(const Ball& x, const Ball& y);

/// x^e, e >= 0, by repeated multiplication (e = 0 gives the exact 1).
Ball pow(const Ball& x, unsigned long e);

/// Round the center components onto a dyadic grid of ~mantissa_bits
/// significant bits and absorb the displacement into the radius. The
/// result always contains x; a ball whose center already fits the budget
/// is returned unchanged. Requires mantissa_bits >= 8.
Ball ball_round(const Ball& x, int mantissa_bits);

/// Exact membership test: |center - v| <= radius, decided by the sign of
/// QuadElem differences.
bool contains(const Ball& x, const QuadElem& v);

/// Certified disjointness / intersection tests (exact).
bool disjoint(const Ball& x, const Ball& y);
bool overlaps(const Ball& x, const Ball& y);

/// Rational upper bound on |x| (coarse, sound).
Rat upper_abs_bound(const QuadElem& x);
Rat upper_abs_bound(const Ball& x);

/// Certified rational bounds lo <= x <= hi with hi - lo <= 10^-digits.
std::pair<Rat, Rat> rational_bounds(const QuadElem& x, int digits);
/// Bounds for the whole ball: hi - lo <= 2*radius + 10^-digits.
std::pair<Rat, Rat> rational_bounds(const Ball& x, int digits);

/// Certified upper bound on |x - y| (sum of center distance and radii),
/// and, for certifiably disjoint balls, a positive lower bound on the
/// distance between the represented values.
Rat gap_upper_bound(const Ball& x, const Ball& y);
Rat gap_lower_bound(const Ball& x, const Ball& y);

/// Ball with rational center and radius < 10^-precision_digits containing
/// sqrt5 exactly; nested for increasing precision. precision_digits >= 1.
Ball sqrt5_enclosure(int precision_digits);

/// Same contract for sqrt(x) of a nonnegative rational.
Ball sqrt_enclosure(const Rat& x, int precision_digits);

/// Ball of radius < 10^-precision_digits containing x^(1/4), by monotone
/// bisection on t^4 with exact dyadic endpoints and outward rounding.
/// Throws DomainError unless x is certified strictly positive.
Ball fourth_root_enclosure(const Ball& x, int precision_digits);

struct Rendered {
    std::string text;
    bool certified; // radius < 0.5 * 10^-digits
};

/// Print the center truncated to `digits` decimal places (exact: the
/// truncation is computed from the center itself, not an approximation).
Rendered render_decimal(const Ball& x, int digits);

} // namespace fibtheta

#endif
