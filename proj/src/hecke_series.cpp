#include "heckezeta/hecke_series.hpp"

#include "heckezeta/gauss_arith.hpp"
#include <json.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace hz {

Complex char_value(int d, const GaussInt& alpha) {
    if (alpha.is_zero()) throw std::domain_error("char_value: zero input");
    double theta = std::atan2(static_cast<double>(alpha.im),
                              static_cast<double>(alpha.re));
    double phase = 4.0 * d * theta;
    return {std::cos(phase), std::sin(phase)};
}

namespace {

// delta(Lambda^d, p^e) for a rational prime p.
double delta_prime_power(int d, std::int64_t p, int e, double theta_split) {
    if (p == 2) return (std::int64_t(d) * e) % 2 == 0 ? 1.0 : -1.0;
    if (p % 4 == 3) return e % 2 == 0 ? 1.0 : 0.0;
    // split: sum over pi^j pibar^(e-j); Lambda^d(pi) = e^{4 i d theta}
    double s = 0.0;
    for (int j = 0; j <= e; ++j) s += std::cos(4.0 * d * theta_split * (2 * j - e));
    return s;
}

double split_angle(std::int64_t p) {
    GaussInt pi = split_prime_above(p);
    return std::atan2(static_cast<double>(pi.im), static_cast<double>(pi.re));
}

}  // namespace

double delta_coeff(int d, std::int64_t n) {
    if (n < 1) throw std::domain_error("delta_coeff: n must be positive");
    double out = 1.0;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        double th = (p % 4 == 1) ? split_angle(p) : 0.0;
        out *= delta_prime_power(d, p, e, th);
    }
    if (m > 1) out *= delta_prime_power(d, m, 1, (m % 4 == 1) ? split_angle(m) : 0.0);
    return out;
}

CoeffTable coeff_table(int d, std::int64_t N) {
    if (N < 1) throw std::domain_error("coeff_table: N must be positive");
    if (N > kCoeffTableCap) throw std::length_error("coeff_table: N exceeds table cap");
    CoeffTable t;
    t.d = d;
    t.upTo = N;
    t.values.assign(static_cast<std::size_t>(N), 1.0);

    // Smallest-prime-factor sieve.
    std::vector<std::int32_t> spf(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t i = 2; i <= N; ++i) {
        if (spf[i] == 0)
            for (std::int64_t j = i; j <= N; j += i)
                if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
    }
    std::unordered_map<std::int64_t, double> angle;
    auto theta_of = [&](std::int64_t p) {
        auto it = angle.find(p);
        if (it != angle.end()) return it->second;
        double th = split_angle(p);
        angle.emplace(p, th);
        return th;
    };
    for (std::int64_t n = 2; n <= N; ++n) {
        std::int64_t p = spf[n];
        std::int64_t m = n;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        double th = (p % 4 == 1) ? theta_of(p) : 0.0;
        t.values[n - 1] = t.values[m - 1] * delta_prime_power(d, p, e, th);
    }
    return t;
}

void CoeffMap::set(const GaussInt& mu, Complex value) {
    if (mu.is_zero()) throw std::domain_error("CoeffMap: zero key");
    support[mu] = value;
    BigInt n = mu.norm();
    if (n > normBound) normBound = static_cast<std::int64_t>(n);
}

std::string CoeffMap::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [mu, v] : support) {
        arr.push_back({{"re", static_cast<std::int64_t>(mu.re)},
                       {"im", static_cast<std::int64_t>(mu.im)},
                       {"a_re", v.real()},
                       {"a_im", v.imag()}});
    }
    return arr.dump();
}

CoeffMap CoeffMap::from_json(const std::string& text) {
    CoeffMap out;
    auto arr = nlohmann::json::parse(text);
    for (const auto& rec : arr) {
        GaussInt mu{rec.at("re").get<std::int64_t>(), rec.at("im").get<std::int64_t>()};
        out.set(mu, {rec.at("a_re").get<double>(), rec.at("a_im").get<double>()});
    }
    return out;
}

CoeffMap CoeffMap::unit_indicator() {
    CoeffMap u;
    u.set(kOne, {1.0, 0.0});
    return u;
}

Complex dirichlet_poly(const CoeffMap& A, Complex s, int d) {
    Complex out(0.0, 0.0);
    for (const auto& [mu, a] : A.support) {
        double logn = std::log(static_cast<double>(mu.norm()));
        out += a * char_value(d, mu) * std::exp(-s * logn);
    }
    return out;
}

PartialZeta partial_zeta(Complex s, int d, std::int64_t N) {
    if (N < 1) throw std::domain_error("partial_zeta: N must be positive");
    CoeffTable t = coeff_table(d, N);
    Complex val(0.0, 0.0);
    for (std::int64_t n = 1; n <= N; ++n)
        val += t.at(n) * std::exp(-s * std::log(double(n)));
    double sigma = s.real();
    double tail;
    if (sigma > 4.0 / 3.0 + 1e-12) {
        // |delta| <= tau(n) <= 3.6 n^{1/3}; integral comparison for the tail.
        tail = 3.6 * std::pow(double(N), 4.0 / 3.0 - sigma) / (sigma - 4.0 / 3.0);
    } else {
        tail = std::numeric_limits<double>::infinity();
    }
    return {val, tail};
}

Complex euler_product_partial(Complex s, int d, std::int64_t normBound) {
    if (s.real() <= 1.0)
        throw std::domain_error("euler_product_partial: Re(s) must exceed 1");
    if (normBound < 1) throw std::domain_error("euler_product_partial: bad bound");
    Complex prod(1.0, 0.0);
    auto local_factor = [&](Complex lambda, double np) {
        prod /= 1.0 - lambda * std::exp(-s * std::log(np));
    };
    if (normBound >= 2) local_factor(char_value(d, GaussInt{1, 1}), 2.0);
    for (std::int64_t p = 3; p <= normBound; p += 2) {
        bool prime = true;
        for (std::int64_t q = 3; q * q <= p; q += 2)
            if (p % q == 0) { prime = false; break; }
        if (!prime) continue;
        if (p % 4 == 1) {
            GaussInt pi = split_prime_above(p);
            local_factor(char_value(d, pi), double(p));
            local_factor(char_value(d, pi.conj()), double(p));
        } else if (p * p <= normBound) {
            local_factor({1.0, 0.0}, double(p) * double(p));
        }
    }
    return prod;
}

}  // namespace hz
