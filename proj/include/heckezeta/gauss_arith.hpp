#pragma once

#include "heckezeta/gauss_int.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace hz {

/// Factorization over Z[i]: unit * prod(prime^exp) with every prime a
/// canonical associate and primes pairwise non-associate.
struct GaussFactorization {
    GaussInt unit;  // one of 1, i, -1, -i
    std::vector<std::pair<GaussInt, int>> factors;

    GaussInt reconstruct() const;
};

/// Trial-division cap on norm(alpha); beyond it factorize() throws.
inline constexpr std::int64_t kFactorNormCap = 1'000'000'000'000LL;

/// Factor a nonzero Gaussian integer by factoring its norm over Z.
/// 2 splits as -i*(1+i)^2; p = 1 mod 4 splits into pi, conj(pi);
/// p = 3 mod 4 stays inert.
GaussFactorization factorize(const GaussInt& alpha);

/// One canonical-associate representative per ideal divisor of (alpha),
/// norm-ascending (ties by re then im).
std::vector<GaussInt> divisors_ideal(const GaussInt& alpha);

/// phi, mu, omega and the ordered-tuple divisor counts tau_j for a nonzero
/// modulus. tau(j) counts ordered j-tuples of elements with product alpha,
/// which equals 4^(j-1) times the ideal-divisor-tuple count.
struct MultiplicativeSuite {
    BigInt phi;
    int mu;  // in {-1, 0, 1}
    int omega;
    std::map<int, BigInt> tau;
};
MultiplicativeSuite multiplicative_suite(const GaussInt& gamma,
                                         std::vector<int> tau_orders = {2});

/// Every alpha with 0 < norm(alpha) <= N, norm-ascending; ties ordered by
/// re descending then im ascending.
std::vector<GaussInt> enumerate_by_norm(std::int64_t N);

/// r2(n)/1: number of alpha with norm exactly n (lattice count).
std::int64_t lattice_count(std::int64_t n);

/// Residue system mod gamma built from the Hermite-normal-form basis of
/// gamma*O, with the reduced (coprime) classes indexed.
struct ResidueSystem {
    GaussInt modulus;
    HnfBasis basis;
    std::vector<GaussInt> representatives;
    std::vector<std::size_t> reduced;
};
ResidueSystem residue_system(const GaussInt& gamma);

/// phi_O(gamma) without materializing the residue system.
BigInt euler_phi(const GaussInt& gamma);

/// Canonical Gaussian prime above a rational prime p = 2 or p = 1 mod 4.
GaussInt split_prime_above(std::int64_t p);

}  // namespace hz
