#include "heckezeta/gauss_arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hz {

GaussInt GaussFactorization::reconstruct() const {
    GaussInt out = unit;
    for (const auto& [p, e] : factors)
        for (int k = 0; k < e; ++k) out = out * p;
    return out;
}

namespace {

std::vector<std::pair<std::int64_t, int>> factor_int(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

// A Gaussian prime above a rational prime p = 1 mod 4 or p = 2.
GaussInt split_prime_above(std::int64_t p) {
    for (std::int64_t x = 1; x * x * 2 <= p; ++x) {
        std::int64_t y2 = p - x * x;
        auto y = static_cast<std::int64_t>(std::llround(std::sqrt(double(y2))));
        for (std::int64_t yy = std::max<std::int64_t>(0, y - 1); yy <= y + 1; ++yy) {
            if (yy * yy == y2) return canonical_associate(GaussInt{yy, x});
        }
    }
    throw std::logic_error("split_prime_above: no representation found");
}

namespace {

void sort_factors(std::vector<std::pair<GaussInt, int>>& f) {
    std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) {
        BigInt na = a.first.norm(), nb = b.first.norm();
        if (na != nb) return na < nb;
        if (a.first.re != b.first.re) return a.first.re < b.first.re;
        return a.first.im < b.first.im;
    });
}

}  // namespace

GaussFactorization factorize(const GaussInt& alpha) {
    if (alpha.is_zero()) throw std::domain_error("factorize: zero input");
    BigInt nrm = alpha.norm();
    if (nrm > kFactorNormCap)
        throw std::domain_error("factorize: norm exceeds trial-division cap");
    auto n = static_cast<std::int64_t>(nrm);

    GaussFactorization out;
    GaussInt rest = alpha;
    for (auto [p, e] : factor_int(n)) {
        if (p == 2) {
            GaussInt pi{1, 1};
            int k = 0;
            while (divides(pi, rest)) { rest = divide_round(rest, pi).q; ++k; }
            if (k > 0) out.factors.emplace_back(pi, k);
        } else if (p % 4 == 1) {
            GaussInt pi = split_prime_above(p);
            GaussInt pibar = canonical_associate(pi.conj());
            for (const GaussInt& q : {pi, pibar}) {
                int k = 0;
                while (divides(q, rest)) { rest = divide_round(rest, q).q; ++k; }
                if (k > 0) out.factors.emplace_back(q, k);
            }
        } else {
            GaussInt q{p, 0};
            int k = 0;
            while (divides(q, rest)) { rest = divide_round(rest, q).q; ++k; }
            if (k > 0) out.factors.emplace_back(q, k);
        }
    }
    if (!rest.is_unit()) throw std::logic_error("factorize: nonunit remainder");
    out.unit = rest;
    sort_factors(out.factors);
    return out;
}

std::vector<GaussInt> divisors_ideal(const GaussInt& alpha) {
    auto f = factorize(alpha);
    std::vector<GaussInt> divs{kOne};
    for (const auto& [p, e] : f.factors) {
        std::vector<GaussInt> next;
        next.reserve(divs.size() * (e + 1));
        for (const GaussInt& d : divs) {
            GaussInt cur = d;
            next.push_back(cur);
            for (int k = 1; k <= e; ++k) {
                cur = canonical_associate(cur * p);
                next.push_back(cur);
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end(), [](const GaussInt& a, const GaussInt& b) {
        BigInt na = a.norm(), nb = b.norm();
        if (na != nb) return na < nb;
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return divs;
}

namespace {

BigInt binomial(int n, int k) {
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

MultiplicativeSuite multiplicative_suite(const GaussInt& gamma,
                                         std::vector<int> tau_orders) {
    auto f = factorize(gamma);
    MultiplicativeSuite out;
    out.phi = 1;
    out.omega = static_cast<int>(f.factors.size());
    bool squarefree = true;
    for (const auto& [p, e] : f.factors) {
        BigInt np = p.norm();
        BigInt pe = 1;
        for (int k = 0; k < e - 1; ++k) pe *= np;
        out.phi *= pe * (np - 1);
        if (e > 1) squarefree = false;
    }
    out.mu = squarefree ? (out.omega % 2 == 0 ? 1 : -1) : 0;
    for (int j : tau_orders) {
        if (j < 1) throw std::domain_error("multiplicative_suite: tau order < 1");
        // Ideal-divisor tuple count: prod C(e + j - 1, j - 1); each element
        // tuple carries an independent unit on all but one coordinate.
        BigInt ideal_count = 1;
        for (const auto& [p, e] : f.factors) ideal_count *= binomial(e + j - 1, j - 1);
        BigInt scale = 1;
        for (int k = 0; k < j - 1; ++k) scale *= 4;
        out.tau[j] = scale * ideal_count;
    }
    return out;
}

std::vector<GaussInt> enumerate_by_norm(std::int64_t N) {
    if (N < 1) throw std::domain_error("enumerate_by_norm: N < 1");
    struct P { std::int64_t re, im, n; };
    std::vector<P> pts;
    auto A = static_cast<std::int64_t>(std::floor(std::sqrt(double(N)))) + 1;
    while (A * A > N) --A;
    for (std::int64_t a = -A; a <= A; ++a) {
        for (std::int64_t b = -A; b <= A; ++b) {
            std::int64_t n = a * a + b * b;
            if (n >= 1 && n <= N) pts.push_back({a, b, n});
        }
    }
    std::sort(pts.begin(), pts.end(), [](const P& x, const P& y) {
        if (x.n != y.n) return x.n < y.n;
        if (x.re != y.re) return x.re > y.re;
        return x.im < y.im;
    });
    std::vector<GaussInt> out;
    out.reserve(pts.size());
    for (const P& p : pts) out.emplace_back(p.re, p.im);
    return out;
}

std::int64_t lattice_count(std::int64_t n) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    std::int64_t count = 0;
    auto r = static_cast<std::int64_t>(std::sqrt(double(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    for (std::int64_t a = -r; a <= r; ++a) {
        std::int64_t b2 = n - a * a;
        auto b = static_cast<std::int64_t>(std::llround(std::sqrt(double(b2))));
        while (b > 0 && b * b > b2) --b;
        while ((b + 1) * (b + 1) <= b2) ++b;
        if (b * b == b2) count += (b == 0 ? 1 : 2);
    }
    return count;
}

ResidueSystem residue_system(const GaussInt& gamma) {
    if (gamma.is_zero()) throw std::domain_error("residue_system: zero modulus");
    ResidueSystem rs;
    rs.modulus = gamma;
    rs.basis = hnf_basis(gamma);
    auto p = static_cast<std::int64_t>(rs.basis.xPeriod);
    auto d = static_cast<std::int64_t>(rs.basis.yPeriod);
    rs.representatives.reserve(static_cast<std::size_t>(p * d));
    for (std::int64_t y = 0; y < d; ++y)
        for (std::int64_t x = 0; x < p; ++x)
            rs.representatives.emplace_back(x, y);
    for (std::size_t i = 0; i < rs.representatives.size(); ++i) {
        const GaussInt& r = rs.representatives[i];
        // gcd(0, gamma) = gamma, so 0 stays only for a unit modulus, where
        // the residue class of 0 is the whole (trivial) unit group.
        if (gcd(r, gamma).is_unit()) rs.reduced.push_back(i);
    }
    return rs;
}

BigInt euler_phi(const GaussInt& gamma) {
    return multiplicative_suite(gamma, {}).phi;
}

}  // namespace hz
