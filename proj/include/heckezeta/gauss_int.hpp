#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hz {

using BigInt = boost::multiprecision::cpp_int;

/// A Gaussian integer, an element of the ring Z[i].
/// Components are arbitrary-precision; all arithmetic is exact.
struct GaussInt {
    BigInt re;
    BigInt im;

    GaussInt() = default;
    GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
    GaussInt(long long r, long long i) : re(r), im(i) {}
    explicit GaussInt(long long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }

    // A unit is one of 1, i, -1, -i.
    bool is_unit() const { return norm() == 1; }

    BigInt norm() const { return re * re + im * im; }

    GaussInt conj() const { return {re, -im}; }

    GaussInt operator-() const { return {-re, -im}; }

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    friend bool operator==(const GaussInt& a, const GaussInt& b) = default;

    std::string str() const;
};

inline const GaussInt kOne{1, 0};
inline const GaussInt kI{0, 1};

std::ostream& operator<<(std::ostream& os, const GaussInt& z);

BigInt norm(const GaussInt& a);

/// Multiplication by i^k, k taken mod 4.
GaussInt unit_pow_times(const GaussInt& a, int k);

/// The canonical associate: the unique unit multiple with re > 0, im >= 0.
/// Zero maps to zero. Returns the associate and (optionally) the unit power
/// u = i^k such that canonical = i^k * a.
GaussInt canonical_associate(const GaussInt& a, int* unit_pow = nullptr);

/// Euclidean division with nearest-integer rounding of the exact rational
/// quotient (ties rounded toward negative components): a = q*b + r with
/// norm(r) <= norm(b)/2.
struct GaussDivResult {
    GaussInt q;
    GaussInt r;
};
GaussDivResult divide_round(const GaussInt& a, const GaussInt& b);

bool divides(const GaussInt& d, const GaussInt& a);

/// Canonical-associate highest common factor by the Euclidean algorithm.
/// gcd(a, 0) = canonical associate of a. Throws std::domain_error if both
/// arguments are zero.
GaussInt gcd(const GaussInt& a, const GaussInt& b);

/// Hermite-normal-form description of the sublattice g*O of O = Z[i].
/// The residue classes mod g are represented by {x + y*i : 0 <= x < xPeriod,
/// 0 <= y < yPeriod}, with xPeriod * yPeriod = norm(g). xShift is the
/// x-offset incurred when y wraps by yPeriod.
struct HnfBasis {
    BigInt xPeriod;
    BigInt yPeriod;
    BigInt xShift;
};
HnfBasis hnf_basis(const GaussInt& g);

/// Representative of a mod g in the canonical residue system given by
/// hnf_basis(g).
GaussInt reduce_mod(const GaussInt& a, const GaussInt& g);
GaussInt reduce_mod(const GaussInt& a, const HnfBasis& h);

/// delta* with delta* * a == 1 mod g, reduced into the canonical residue
/// system for g. Throws std::domain_error when gcd(a, g) is a non-unit
/// or g == 0.
GaussInt inv_mod(const GaussInt& a, const GaussInt& g);

}  // namespace hz
