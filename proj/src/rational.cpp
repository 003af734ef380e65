#include "fibtheta/rational.hpp"

#include "fibtheta/errors.hpp"

#include <cassert>
#include <sstream>

namespace fibtheta {

Int pow10z(unsigned long k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

Rat pow10q(long k) {
    if (k >= 0) return Rat(pow10z(static_cast<unsigned long>(k)));
    Rat r(Int(1), pow10z(static_cast<unsigned long>(-k)));
    return r;
}

Int isqrt_floor(const Int& n) {
    if (n < 0) throw DomainError("isqrt_floor: negative argument");
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    // Self-certifying: s^2 <= n < (s+1)^2.
    if (!(s * s <= n && n < (s + 1) * (s + 1)))
        throw Error("isqrt_floor: certificate failed");
    return s;
}

Int round_nearest(const Int& num, const Int& den) {
    assert(den > 0);
    Int twice = 2 * num;
    if (num >= 0)
        twice += den;
    else
        twice -= den;
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Int(2 * den).get_mpz_t());
    return q;
}

Int round_nearest(const Rat& x) {
    return round_nearest(x.get_num(), x.get_den());
}

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Rat dyadic_round(const Rat& x, long k) {
    if (k < 0) k = 0;
    // round(x * 2^k) / 2^k
    Int num = x.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
    Int r = round_nearest(num, x.get_den());
    Int den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k));
    Rat out(r, den);
    out.canonicalize();
    return out;
}

long mag_exponent(const Rat& x) {
    assert(x != 0);
    long nb = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
    // 2^(nb-1) <= |num| < 2^nb and likewise den, so |x| < 2^(nb-db+1).
    return nb - db + 1;
}

Rat coarse_upper(const Rat& x, int bits) {
    if (x == 0) return Rat(0);
    if (x < 0) throw DomainError("coarse_upper: negative radius bound");
    long e = mag_exponent(x);
    long k = bits - e; // grid 2^-k
    if (k < 0) k = 0;
    // ceil(x * 2^k) / 2^k >= x
    Int num = x.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Int den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k));
    Rat out(q, den);
    out.canonicalize();
    return out;
}

std::string decimal_truncate(const Rat& x, int digits) {
    if (digits < 1) throw UsageError("decimal_truncate: digits must be >= 1");
    bool neg = x < 0;
    Rat ax = neg ? Rat(-x) : x;
    Int scaled = ax.get_num() * pow10z(static_cast<unsigned long>(digits)) / ax.get_den();
    Int ip = scaled / pow10z(static_cast<unsigned long>(digits));
    Int fp = scaled % pow10z(static_cast<unsigned long>(digits));
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    std::string out;
    if (neg && (ip != 0 || fp != 0)) out += '-';
    out += ip.get_str();
    out += '.';
    out += frac;
    return out;
}

std::string short_decimal_bound(const Rat& x, bool round_up) {
    if (x == 0) return "0";
    if (x < 0) throw DomainError("short_decimal_bound: negative bound");
    // Find e10 with 10^e10 <= x < 10^(e10+1).
    long approx = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 10)) -
                  static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 10));
    long e10 = approx - 2;
    while (x >= pow10q(e10 + 1)) ++e10;
    while (x < pow10q(e10)) --e10;
    // Mantissa with two fractional digits.
    Rat m = x / pow10q(e10 - 2); // in [100, 1000)
    Int mi;
    if (round_up) {
        mpz_cdiv_q(mi.get_mpz_t(), m.get_num().get_mpz_t(), m.get_den().get_mpz_t());
    } else {
        mpz_fdiv_q(mi.get_mpz_t(), m.get_num().get_mpz_t(), m.get_den().get_mpz_t());
    }
    if (mi == 1000) { // rounding crossed a decade
        mi = 100;
        ++e10;
    }
    std::string d = mi.get_str();
    std::ostringstream os;
    os << d[0] << '.' << d[1] << d[2] << 'e' << e10;
    return os.str();
}

} // namespace fibtheta
