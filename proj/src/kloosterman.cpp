#include "heckezeta/kloosterman.hpp"

#include "heckezeta/smoothing.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hz {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::int64_t to_i64(const BigInt& v) { return static_cast<std::int64_t>(v); }

// Fractional phase Re(num / gamma) mod 1, via the exact integer
// Re(num * conj(gamma)) reduced mod norm(gamma).
double exact_phase(const GaussInt& num, const GaussInt& gamma, std::int64_t n) {
    BigInt re = num.re * gamma.re + num.im * gamma.im;
    BigInt m = re % n;
    if (m < 0) m += n;
    return static_cast<double>(to_i64(m)) / static_cast<double>(n);
}

}  // namespace

KloostermanResult kloosterman_direct(const KloostermanQuery& q, std::int64_t cap) {
    if (q.gamma.re == 0 && q.gamma.im == 0)
        throw std::domain_error("kloosterman_direct: zero modulus");
    BigInt nBig = q.gamma.norm();
    if (nBig > cap) throw std::length_error("kloosterman_direct: norm(gamma) above cap");
    std::int64_t n = to_i64(nBig);

    KloostermanResult out;
    out.method = "direct";
    if (n == 1) {  // trivial group: single term delta = delta* = 0
        out.value = 1.0;
        out.terms = 1;
        return out;
    }

    HnfBasis basis = hnf_basis(q.gamma);
    std::int64_t p = to_i64(basis.xPeriod);
    std::int64_t d = to_i64(basis.yPeriod);
    double acc = 0.0, leak = 0.0;
    for (std::int64_t yy = 0; yy < d; ++yy) {
        for (std::int64_t xx = 0; xx < p; ++xx) {
            GaussInt delta{xx, yy};
            if (!gcd(delta, q.gamma).is_unit()) continue;
            GaussInt dstar = inv_mod(delta, q.gamma);
            GaussInt num = q.alpha * dstar + q.beta * delta;
            double ph = kTwoPi * exact_phase(num, q.gamma, n);
            acc += std::cos(ph);
            leak += std::sin(ph);
            ++out.terms;
        }
    }
    out.value = acc;
    out.imagLeak = std::abs(leak);
    return out;
}

KloostermanResult ramanujan_eval(const GaussInt& alpha, const GaussInt& gamma) {
    if (gamma.re == 0 && gamma.im == 0)
        throw std::domain_error("ramanujan_eval: zero modulus");
    GaussInt g = (alpha.re == 0 && alpha.im == 0) ? canonical_associate(gamma)
                                                  : gcd(alpha, gamma);
    KloostermanResult out;
    out.method = "ramanujan";
    for (const GaussInt& nu : divisors_ideal(g)) {
        GaussInt quot = divide_round(gamma, nu).q;
        int mu = multiplicative_suite(quot, {}).mu;
        if (mu != 0) out.value += mu * static_cast<double>(to_i64(nu.norm()));
        ++out.terms;
    }
    return out;
}

BoundCheck bound_check(const KloostermanQuery& q, const KloostermanResult& r) {
    BoundCheck out;
    double phi = static_cast<double>(to_i64(euler_phi(q.gamma)));
    out.trivialOk = std::abs(r.value) <= phi + 1e-6;
    GaussInt g3 = gcd(q.alpha, gcd(q.beta, q.gamma));
    double tau2 = static_cast<double>(to_i64(multiplicative_suite(q.gamma, {2}).tau.at(2)));
    double bound = 8.0 * tau2 * tau2 * static_cast<double>(to_i64(g3.norm())) *
                   static_cast<double>(to_i64(q.gamma.norm()));
    out.weilOk = r.value * r.value <= bound + 1e-6;
    out.ratioWeil = r.value * r.value / bound;
    return out;
}

TestFunction gaussian_test(double sigma0) {
    if (!(sigma0 > 0.0)) throw std::invalid_argument("gaussian_test: sigma0 must be positive");
    TestFunction f;
    f.radial = true;
    f.radius = 3.2 * sigma0;  // exp(-pi*3.2^2) < 1e-13
    f.value = [sigma0](Complex z) {
        double r2 = std::norm(z) / (sigma0 * sigma0);
        return Complex(std::exp(-M_PI * r2), 0.0);
    };
    return f;
}

TestFunction bump_test(double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("bump_test: scale must be positive");
    TestFunction f;
    f.radial = true;
    f.radius = scale;
    f.value = [scale](Complex z) {
        double t2 = std::norm(z) / (scale * scale);
        if (t2 >= 1.0) return Complex(0.0, 0.0);
        return Complex(std::exp(-1.0 / (1.0 - t2)), 0.0);
    };
    return f;
}

Complex fourier_hat(const TestFunction& f, Complex w) {
    if (!f.value || !(f.radius > 0.0))
        throw std::invalid_argument("fourier_hat: test function lacks a support radius");
    double R = f.radius;
    int osc = static_cast<int>(std::ceil(std::abs(w) * R));
    int mAng = 64 + 8 * osc;
    int nRad = 64 + 8 * osc;
    std::vector<double> gx, gw;
    gauss_legendre(nRad, gx, gw);
    Complex acc = 0.0;
    for (int i = 0; i < nRad; ++i) {
        double r = 0.5 * R * (gx[i] + 1.0);
        double wr = 0.5 * R * gw[i] * r;
        Complex ring = 0.0;
        for (int j = 0; j < mAng; ++j) {
            double th = kTwoPi * j / mAng;
            Complex z(r * std::cos(th), r * std::sin(th));
            double ph = -kTwoPi * (w.real() * z.real() - w.imag() * z.imag());
            ring += f.value(z) * Complex(std::cos(ph), std::sin(ph));
        }
        acc += wr * ring * (kTwoPi / mAng);
    }
    if (f.radial) acc.imag(0.0);
    return acc;
}

PoissonReport poisson_plain(Complex tau, double sigma0) {
    TestFunction f = gaussian_test(sigma0);
    PoissonReport out;
    auto lim = static_cast<std::int64_t>(std::ceil(f.radius)) + 1;
    for (std::int64_t a = -lim; a <= lim; ++a)
        for (std::int64_t b = -lim; b <= lim; ++b) {
            Complex nu(static_cast<double>(a), static_cast<double>(b));
            double ph = kTwoPi * (tau.real() * nu.real() - tau.imag() * nu.imag());
            out.lhs += f.value(nu) * Complex(std::cos(ph), std::sin(ph));
        }
    double hatRadius = 3.2 / sigma0;
    auto hlim = static_cast<std::int64_t>(std::ceil(hatRadius + std::abs(tau))) + 1;
    for (std::int64_t a = -hlim; a <= hlim; ++a)
        for (std::int64_t b = -hlim; b <= hlim; ++b) {
            Complex xi(static_cast<double>(a), static_cast<double>(b));
            if (std::abs(xi - tau) > hatRadius) continue;
            out.rhs += fourier_hat(f, xi - tau);
        }
    out.absErr = std::abs(out.lhs - out.rhs);
    return out;
}

PoissonReport poisson_progression(const GaussInt& alpha, const GaussInt& gamma,
                                  double sigma0) {
    if (gamma.re == 0 && gamma.im == 0)
        throw std::domain_error("poisson_progression: zero modulus");
    TestFunction f = gaussian_test(sigma0);
    PoissonReport out;
    std::int64_t n = to_i64(gamma.norm());
    double gabs = std::sqrt(static_cast<double>(n));
    Complex alphaC(static_cast<double>(to_i64(alpha.re)), static_cast<double>(to_i64(alpha.im)));
    Complex gammaC(static_cast<double>(to_i64(gamma.re)), static_cast<double>(to_i64(gamma.im)));
    auto mlim = static_cast<std::int64_t>(std::ceil((f.radius + std::abs(alphaC)) / gabs)) + 1;
    for (std::int64_t a = -mlim; a <= mlim; ++a)
        for (std::int64_t b = -mlim; b <= mlim; ++b) {
            Complex nu = alphaC + gammaC * Complex(static_cast<double>(a), static_cast<double>(b));
            if (std::abs(nu) > f.radius) continue;
            out.lhs += f.value(nu);
        }
    double hatRadius = 3.2 / sigma0;
    auto hlim = static_cast<std::int64_t>(std::ceil(hatRadius * gabs)) + 1;
    for (std::int64_t a = -hlim; a <= hlim; ++a)
        for (std::int64_t b = -hlim; b <= hlim; ++b) {
            GaussInt xi{a, b};
            Complex xiC(static_cast<double>(a), static_cast<double>(b));
            if (std::abs(xiC / gammaC) > hatRadius) continue;
            double ph = kTwoPi * exact_phase(alpha * xi, gamma, n);
            out.rhs += fourier_hat(f, xiC / gammaC) * Complex(std::cos(ph), std::sin(ph));
        }
    out.rhs /= static_cast<double>(n);
    out.absErr = std::abs(out.lhs - out.rhs);
    return out;
}

PoissonReport poisson_twist(const GaussInt& alpha, const GaussInt& gamma, double sigma0) {
    if (gamma.re == 0 && gamma.im == 0)
        throw std::domain_error("poisson_twist: zero modulus");
    TestFunction f = gaussian_test(sigma0);
    PoissonReport out;
    std::int64_t n = to_i64(gamma.norm());
    Complex gammaC(static_cast<double>(to_i64(gamma.re)), static_cast<double>(to_i64(gamma.im)));
    auto lim = static_cast<std::int64_t>(std::ceil(f.radius)) + 1;
    for (std::int64_t a = -lim; a <= lim; ++a)
        for (std::int64_t b = -lim; b <= lim; ++b) {
            GaussInt nu{a, b};
            if ((a == 0 && b == 0) || !gcd(nu, gamma).is_unit()) continue;
            Complex nuC(static_cast<double>(a), static_cast<double>(b));
            if (std::abs(nuC) > f.radius) continue;
            GaussInt nustar = inv_mod(nu, gamma);
            double ph = kTwoPi * exact_phase(alpha * nustar, gamma, n);
            out.lhs += f.value(nuC) * Complex(std::cos(ph), std::sin(ph));
        }
    double hatRadius = 3.2 / sigma0;
    double gabs = std::abs(gammaC);
    auto hlim = static_cast<std::int64_t>(std::ceil(hatRadius * gabs)) + 1;
    std::map<std::pair<std::int64_t, std::int64_t>, double> memo;
    for (std::int64_t a = -hlim; a <= hlim; ++a)
        for (std::int64_t b = -hlim; b <= hlim; ++b) {
            GaussInt xi{a, b};
            Complex xiC(static_cast<double>(a), static_cast<double>(b));
            if (std::abs(xiC / gammaC) > hatRadius) continue;
            GaussInt red = reduce_mod(xi, gamma);
            auto key = std::make_pair(to_i64(red.re), to_i64(red.im));
            auto it = memo.find(key);
            double sval;
            if (it != memo.end()) {
                sval = it->second;
            } else {
                sval = kloosterman_direct({alpha, red, gamma}).value;
                memo.emplace(key, sval);
            }
            out.rhs += fourier_hat(f, xiC / gammaC) * sval;
        }
    out.rhs /= static_cast<double>(n);
    out.absErr = std::abs(out.lhs - out.rhs);
    return out;
}

}  // namespace hz
