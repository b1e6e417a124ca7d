#pragma once

#include "heckezeta/gauss_int.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hz {

using Complex = std::complex<double>;

/// Grossencharacter value Lambda^d(alpha) = (alpha/|alpha|)^{4d}; a complex
/// unit, constant on unit orbits. Throws std::domain_error at alpha = 0.
Complex char_value(int d, const GaussInt& alpha);

/// delta(Lambda^d, n) = (1/4) sum_{norm(alpha)=n} Lambda^d(alpha), computed
/// structurally from the factorization of n over Z[i]. Real for all d, n.
double delta_coeff(int d, std::int64_t n);

/// Hard cap on coefficient table length.
inline constexpr std::int64_t kCoeffTableCap = 10'000'000;

/// Table of delta(Lambda^d, n), n = 1..upTo, built by a smallest-prime-factor
/// sieve (multiplicativity). Throws std::length_error beyond kCoeffTableCap.
struct CoeffTable {
    int d = 0;
    std::int64_t upTo = 0;
    std::vector<double> values;  // values[n-1] = delta(Lambda^d, n)

    double at(std::int64_t n) const { return values[static_cast<std::size_t>(n - 1)]; }
};
CoeffTable coeff_table(int d, std::int64_t N);

/// Finite coefficient map A : O - {0} -> C with support of norm <= normBound.
/// Keys are arbitrary nonzero Gaussian integers; A(mu) and A(i mu) may
/// differ.
struct CoeffMap {
    struct KeyLess {
        bool operator()(const GaussInt& a, const GaussInt& b) const {
            BigInt na = a.norm(), nb = b.norm();
            if (na != nb) return na < nb;
            if (a.re != b.re) return a.re > b.re;  // gauss-core tie order
            return a.im < b.im;
        }
    };
    std::map<GaussInt, Complex, KeyLess> support;
    std::int64_t normBound = 0;

    void set(const GaussInt& mu, Complex value);
    std::string to_json() const;
    static CoeffMap from_json(const std::string& text);

    /// The indicator of mu = 1 (the map U of the moment bounds).
    static CoeffMap unit_indicator();
};

/// P_M(A; s, lambda^d) = sum A(mu) Lambda^d(mu) norm(mu)^{-s}, summed in
/// norm-ascending deterministic order.
Complex dirichlet_poly(const CoeffMap& A, Complex s, int d);

/// Truncated Dirichlet series with a crude tail estimate (valid as a bound
/// only for Re(s) > 4/3; +inf is reported otherwise).
struct PartialZeta {
    Complex value;
    double tailEstimate;
};
PartialZeta partial_zeta(Complex s, int d, std::int64_t N);

/// Partial Euler product over prime ideals of norm <= normBound.
/// Throws std::domain_error when Re(s) <= 1.
Complex euler_product_partial(Complex s, int d, std::int64_t normBound);

}  // namespace hz
