#include "heckezeta/gauss_int.hpp"

#include <ostream>
#include <sstream>

namespace hz {

std::ostream& operator<<(std::ostream& os, const GaussInt& z) {
    os << z.re;
    if (z.im >= 0)
        os << "+" << z.im << "i";
    else
        os << z.im << "i";
    return os;
}

std::string GaussInt::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

BigInt norm(const GaussInt& a) { return a.norm(); }

GaussInt unit_pow_times(const GaussInt& a, int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return a;
        case 1: return {-a.im, a.re};
        case 2: return -a;
        default: return {a.im, -a.re};
    }
}

GaussInt canonical_associate(const GaussInt& a, int* unit_pow) {
    if (a.is_zero()) {
        if (unit_pow) *unit_pow = 0;
        return a;
    }
    for (int k = 0; k < 4; ++k) {
        GaussInt c = unit_pow_times(a, k);
        if (c.re > 0 && c.im >= 0) {
            if (unit_pow) *unit_pow = k;
            return c;
        }
    }
    throw std::logic_error("canonical_associate: unreachable");
}

namespace {

// Nearest integer to p/q (q > 0), ties rounded down.
BigInt round_nearest(const BigInt& p, const BigInt& q) {
    // floor((2p + q) / (2q)) rounds half up; we want ties toward -inf,
    // i.e. round half down: ceil((2p - q) / (2q)).
    BigInt num = 2 * p + q - 1;
    BigInt den = 2 * q;
    // floor division for possibly negative numerator
    BigInt fl = num / den;
    if (num % den != 0 && (num < 0) != (den < 0)) fl -= 1;
    return fl;
}

}  // namespace

GaussDivResult divide_round(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero()) throw std::domain_error("divide_round: division by zero");
    BigInt n = b.norm();
    GaussInt p = a * b.conj();  // a/b = p / n exactly
    GaussInt q{round_nearest(p.re, n), round_nearest(p.im, n)};
    GaussInt r = a - q * b;
    return {q, r};
}

bool divides(const GaussInt& d, const GaussInt& a) {
    if (d.is_zero()) return a.is_zero();
    GaussInt p = a * d.conj();
    BigInt n = d.norm();
    return p.re % n == 0 && p.im % n == 0;
}

GaussInt gcd(const GaussInt& a, const GaussInt& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gcd: both arguments zero");
    GaussInt x = a, y = b;
    while (!y.is_zero()) {
        GaussInt r = divide_round(x, y).r;
        x = y;
        y = r;
    }
    return canonical_associate(x);
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) q -= 1;
    return q;
}

BigInt pos_mod(const BigInt& a, const BigInt& b) { return a - floor_div(a, b) * b; }

// Extended gcd over Z: returns g = gcd(a,b) >= 0 and s,t with s*a + t*b = g.
BigInt ext_gcd(BigInt a, BigInt b, BigInt& s, BigInt& t) {
    BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        BigInt q = a / b;
        BigInt r = a - q * b;
        a = b; b = r;
        BigInt s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
    s = s0; t = t0;
    return a;
}

}  // namespace

HnfBasis hnf_basis(const GaussInt& g) {
    if (g.is_zero()) throw std::domain_error("hnf_basis: zero modulus");
    // Lattice generated by (a, b) and (-b, a) where g = a + bi.
    // Second coordinates generate gcd(a, b)*Z; pick s, t with s*b + t*a = d,
    // giving the lattice vector (s*a - t*b, d).
    BigInt s, t;
    BigInt d = ext_gcd(g.im, g.re, s, t);
    BigInt n = g.norm();
    BigInt p = n / d;
    BigInt shift = pos_mod(s * g.re - t * g.im, p);
    return {p, d, shift};
}

GaussInt reduce_mod(const GaussInt& a, const HnfBasis& h) {
    BigInt y = pos_mod(a.im, h.yPeriod);
    BigInt k = (a.im - y) / h.yPeriod;
    BigInt x = pos_mod(a.re - k * h.xShift, h.xPeriod);
    return {x, y};
}

GaussInt reduce_mod(const GaussInt& a, const GaussInt& g) {
    return reduce_mod(a, hnf_basis(g));
}

GaussInt inv_mod(const GaussInt& a, const GaussInt& g) {
    if (g.is_zero()) throw std::domain_error("inv_mod: zero modulus");
    // Extended Euclid: track u with u*a == r mod g.
    GaussInt r0 = g, r1 = divide_round(a, g).r;
    GaussInt u0{0, 0}, u1{1, 0};
    while (!r1.is_zero()) {
        auto [q, r2] = divide_round(r0, r1);
        GaussInt u2 = u0 - q * u1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
    }
    if (!r0.is_unit())
        throw std::domain_error("inv_mod: argument not invertible mod " + g.str());
    // r0 = u0 * a mod g with r0 a unit; scale so the product is 1.
    int k = 0;
    canonical_associate(r0, &k);  // i^k * r0 has re>0,im>=0 i.e. equals 1
    GaussInt inv = unit_pow_times(u0, k);
    return reduce_mod(inv, g);
}

}  // namespace hz
