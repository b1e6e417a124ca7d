#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckezeta/gauss_arith.hpp"
#include "heckezeta/gauss_int.hpp"
#include "heckezeta/rng.hpp"

#include <map>
#include <set>

using namespace hz;

namespace {
int chi4(std::int64_t k) {
    switch (k & 3) {
        case 1: return 1;
        case 3: return -1;
        default: return 0;
    }
}
}  // namespace

TEST_CASE("norm basics") {
    CHECK(GaussInt{3, 4}.norm() == 25);
    CHECK(GaussInt{0, 0}.norm() == 0);
    CHECK(GaussInt{1, 1}.norm() == 2);
    // total multiplicativity on a grid
    for (long long a = -4; a <= 4; ++a)
        for (long long b = -4; b <= 4; ++b)
            for (long long c = -3; c <= 3; ++c)
                for (long long d = -3; d <= 3; ++d) {
                    GaussInt x{a, b}, y{c, d};
                    CHECK((x * y).norm() == x.norm() * y.norm());
                }
}

TEST_CASE("gcd canonical examples") {
    CHECK(gcd(GaussInt{1, 1}, GaussInt{2, 0}) == GaussInt{1, 1});
    CHECK(gcd(GaussInt{3, 0}, GaussInt{5, 0}) == GaussInt{1, 0});
    CHECK(gcd(GaussInt{0, 0}, GaussInt{0, -7}) == GaussInt{7, 0});
    CHECK_THROWS_AS(gcd(GaussInt{0, 0}, GaussInt{0, 0}), std::domain_error);
}

TEST_CASE("gcd divides both arguments and dominates common divisors") {
    std::vector<GaussInt> pool = enumerate_by_norm(50);
    Xoshiro256StarStar rng(123);
    for (int trial = 0; trial < 300; ++trial) {
        const GaussInt& a = pool[rng.below(pool.size())];
        const GaussInt& b = pool[rng.below(pool.size())];
        GaussInt g = gcd(a, b);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        for (const GaussInt& c : enumerate_by_norm(25)) {
            if (divides(c, a) && divides(c, b)) CHECK(divides(c, g));
        }
    }
}

TEST_CASE("inv_mod") {
    CHECK(inv_mod(GaussInt{1, 0}, GaussInt{3, 0}) == GaussInt{1, 0});
    GaussInt invI = inv_mod(GaussInt{0, 1}, GaussInt{3, 0});
    CHECK(divides(GaussInt{3, 0}, invI * GaussInt{0, 1} - kOne));
    CHECK_THROWS_AS(inv_mod(GaussInt{1, 1}, GaussInt{2, 0}), std::domain_error);
    // brute validation across residue systems
    for (const GaussInt& g : {GaussInt{3, 0}, GaussInt{2, 1}, GaussInt{4, 1}, GaussInt{5, 2}}) {
        ResidueSystem rs = residue_system(g);
        for (std::size_t idx : rs.reduced) {
            GaussInt inv = inv_mod(rs.representatives[idx], g);
            CHECK(divides(g, inv * rs.representatives[idx] - kOne));
            CHECK(inv == reduce_mod(inv, g));
        }
    }
}

TEST_CASE("factorize structure and examples") {
    GaussFactorization f2 = factorize(GaussInt{2, 0});
    CHECK(f2.unit == GaussInt{0, -1});
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first == GaussInt{1, 1});
    CHECK(f2.factors[0].second == 2);

    GaussFactorization f5 = factorize(GaussInt{5, 0});
    CHECK(f5.factors.size() == 2);
    CHECK(f5.reconstruct() == GaussInt{5, 0});

    GaussFactorization f3 = factorize(GaussInt{3, 0});
    CHECK(f3.unit == kOne);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].first == GaussInt{3, 0});

    CHECK_THROWS_AS(factorize(GaussInt{0, 0}), std::domain_error);
}

TEST_CASE("factorize round-trip and canonical primes, norm <= 1e4") {
    for (const GaussInt& a : enumerate_by_norm(10000)) {
        GaussFactorization f = factorize(a);
        CHECK(f.reconstruct() == a);
        for (const auto& [p, e] : f.factors) {
            CHECK(p.re > 0);
            CHECK(p.im >= 0);
            CHECK(e >= 1);
        }
    }
}

TEST_CASE("divisors_ideal") {
    CHECK(divisors_ideal(kOne) == std::vector<GaussInt>{kOne});
    CHECK(divisors_ideal(GaussInt{1, 1}) == std::vector<GaussInt>{kOne, GaussInt{1, 1}});
    CHECK(divisors_ideal(GaussInt{2, 0}) ==
          std::vector<GaussInt>{kOne, GaussInt{1, 1}, GaussInt{2, 0}});
}

TEST_CASE("multiplicative_suite examples") {
    MultiplicativeSuite s1 = multiplicative_suite(GaussInt{1, 1});
    CHECK(s1.phi == 1);
    CHECK(s1.mu == -1);
    CHECK(s1.omega == 1);
    CHECK(s1.tau.at(2) == 8);

    MultiplicativeSuite su = multiplicative_suite(kOne);
    CHECK(su.phi == 1);
    CHECK(su.mu == 1);
    CHECK(su.omega == 0);
    CHECK(su.tau.at(2) == 4);

    MultiplicativeSuite s2 = multiplicative_suite(GaussInt{2, 0});
    CHECK(s2.phi == 2);
    CHECK(s2.mu == 0);
    CHECK(s2.omega == 1);
    CHECK(s2.tau.at(2) == 12);
}

TEST_CASE("tau_2 = 4 * ideal divisor count, norm <= 2000") {
    for (const GaussInt& a : enumerate_by_norm(2000)) {
        if (!(a.re > 0 && a.im >= 0)) continue;  // one associate is enough
        MultiplicativeSuite s = multiplicative_suite(a);
        CHECK(s.tau.at(2) == BigInt(4) * BigInt(divisors_ideal(a).size()));
    }
}

TEST_CASE("enumerate_by_norm counts and order") {
    CHECK(enumerate_by_norm(1).size() == 4);
    CHECK(enumerate_by_norm(2).size() == 8);
    CHECK(enumerate_by_norm(3).size() == 8);
    std::vector<GaussInt> all = enumerate_by_norm(5000);
    std::set<std::pair<long long, long long>> seen;
    BigInt last = 0;
    std::map<std::int64_t, int> byNorm;
    for (const GaussInt& a : all) {
        CHECK(a.norm() >= last);
        last = a.norm();
        seen.insert({static_cast<long long>(a.re), static_cast<long long>(a.im)});
        byNorm[static_cast<std::int64_t>(a.norm())]++;
    }
    CHECK(seen.size() == all.size());  // no duplicates
    for (std::int64_t n = 1; n <= 5000; ++n) {
        std::int64_t jac = 0;
        for (std::int64_t k = 1; k * k <= n; ++k) {
            if (n % k) continue;
            jac += chi4(k);
            if (k * k != n) jac += chi4(n / k);
        }
        CHECK(byNorm[n] == 4 * jac);
        CHECK(lattice_count(n) == 4 * jac);
    }
}

TEST_CASE("residue systems") {
    ResidueSystem r1 = residue_system(GaussInt{1, 1});
    CHECK(r1.representatives.size() == 2);
    CHECK(r1.reduced.size() == 1);
    ResidueSystem r2 = residue_system(GaussInt{2, 0});
    CHECK(r2.representatives.size() == 4);
    CHECK(r2.reduced.size() == 2);
    ResidueSystem r3 = residue_system(GaussInt{3, 0});
    CHECK(r3.representatives.size() == 9);
    CHECK(r3.reduced.size() == 8);
}

TEST_CASE("euler_phi equals reduced-residue count, norm <= 400") {
    for (const GaussInt& g : enumerate_by_norm(400)) {
        if (!(g.re > 0 && g.im >= 0)) continue;
        ResidueSystem rs = residue_system(g);
        CHECK(euler_phi(g) == BigInt(rs.reduced.size()));
        CHECK(BigInt(rs.representatives.size()) == g.norm());
        // representatives pairwise incongruent: reduction is the identity
        for (const GaussInt& rep : rs.representatives) CHECK(reduce_mod(rep, g) == rep);
    }
}
