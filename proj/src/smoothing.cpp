#include "heckezeta/smoothing.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hz {

namespace {

constexpr int kCells = 2048;
constexpr int kLocalGl = 24;
constexpr int kMaxDeriv = 12;

}  // namespace

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const double pi = std::numbers::pi;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double t = std::cos(pi * (i + 0.75) / (n + 0.5));
        double p0, p1, dp;
        for (int iter = 0; iter < 100; ++iter) {
            p0 = 1.0; p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1; p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

SmoothingEngine::SmoothingEngine(SmoothingConfig cfg) : cfg_(cfg) {
    if (cfg_.b <= 1.0) throw std::domain_error("SmoothingEngine: b must exceed 1");
    log_b_ = std::log(cfg_.b);
    gauss_legendre(kLocalGl, gl_x_, gl_w_);
    gauss_legendre(cfg_.quadNodes, glq_x_, glq_w_);

    // Prefix integrals of Phi at cell boundaries t_j = -1 + j*cell.
    cell_ = 2.0 / kCells;
    prefix_.assign(kCells + 1, 0.0);
    for (int j = 0; j < kCells; ++j) {
        double lo = -1.0 + j * cell_, hi = lo + cell_;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double s = 0.0;
        for (int i = 0; i < kLocalGl; ++i) s += gl_w_[i] * phi(mid + half * gl_x_[i]);
        prefix_[j + 1] = prefix_[j] + half * s;
    }
    c_ = 1.0 / prefix_[kCells];

    // Exact integer coefficients of P_k in Phi^(k) = P_k/(1-t^2)^(2k) Phi:
    // P_{k+1} = (1-t^2)^2 P_k' + (4k t (1-t^2) - 2t) P_k.
    using Big = boost::multiprecision::cpp_int;
    std::vector<std::vector<Big>> pk{{Big(1)}};
    for (int k = 0; k < kMaxDeriv; ++k) {
        const auto& p = pk.back();
        int deg = static_cast<int>(p.size()) - 1;
        std::vector<Big> q(deg + 4, Big(0));
        // (1 - t^2)^2 P' = P' - 2 t^2 P' + t^4 P'
        for (int i = 1; i <= deg; ++i) {
            Big d = p[i] * i;
            q[i - 1] += d;
            q[i + 1] -= 2 * d;
            q[i + 3] += d;
        }
        // 4k t (1 - t^2) P = 4k t P - 4k t^3 P
        for (int i = 0; i <= deg; ++i) {
            q[i + 1] += 4 * k * p[i];
            q[i + 3] -= 4 * k * p[i];
        }
        // -2 t P
        for (int i = 0; i <= deg; ++i) q[i + 1] -= 2 * p[i];
        while (q.size() > 1 && q.back() == 0) q.pop_back();
        pk.push_back(std::move(q));
    }
    pk_.resize(pk.size());
    for (std::size_t k = 0; k < pk.size(); ++k)
        for (const auto& coeff : pk[k])
            pk_[k].push_back(static_cast<double>(coeff));
}

double SmoothingEngine::phi(double t) const {
    if (t <= -1.0 || t >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - t * t));
}

double SmoothingEngine::phi_deriv(int k, double t) const {
    if (k < 0 || k > kMaxDeriv)
        throw std::domain_error("phi_deriv: order outside precomputed range");
    if (t <= -1.0 || t >= 1.0) return 0.0;
    double poly = 0.0;
    const auto& p = pk_[k];
    for (auto it = p.rbegin(); it != p.rend(); ++it) poly = poly * t + *it;
    double w = 1.0 - t * t;
    return poly / std::pow(w, 2.0 * k) * phi(t);
}

double SmoothingEngine::phi_integral(double lo, double hi) const {
    lo = std::max(lo, -1.0);
    hi = std::min(hi, 1.0);
    if (hi <= lo) return 0.0;
    auto cell_at = [&](double t) {
        int j = static_cast<int>(std::floor((t + 1.0) / cell_));
        return std::clamp(j, 0, kCells);
    };
    auto local = [&](double a, double b) {
        if (b <= a) return 0.0;
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double s = 0.0;
        for (int i = 0; i < kLocalGl; ++i) s += gl_w_[i] * phi(mid + half * gl_x_[i]);
        return half * s;
    };
    int jl = cell_at(lo), jh = cell_at(hi);
    double tl = -1.0 + (jl + 1) * cell_;
    double th = -1.0 + jh * cell_;
    if (jl == jh) return local(lo, hi);
    return local(lo, tl) + (prefix_[jh] - prefix_[jl + 1]) + local(th, hi);
}

double SmoothingEngine::rho(double u) const {
    if (u <= 0.0) throw std::domain_error("rho: u must be positive");
    double L = std::log(u) / log_b_;
    if (L <= -1.0) return 1.0;
    if (L >= 1.0) return 0.0;
    return c_ * phi_integral(L, 1.0);
}

double SmoothingEngine::rho_k(int k, double u) const {
    if (k < 1) throw std::domain_error("rho_k: k must be >= 1");
    if (u <= 0.0) throw std::domain_error("rho_k: u must be positive");
    double L = std::log(u) / log_b_;
    // (u d/du)^k rho = -c (log b)^{-k} Phi^{(k-1)}(L(u))
    return -c_ * std::pow(log_b_, -double(k)) * phi_deriv(k - 1, L);
}

Complex SmoothingEngine::rho_tilde(const std::vector<Complex>& a, double u) const {
    Complex out = rho(u);
    double sign = -1.0;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        out += sign * a[k - 1] * rho_k(static_cast<int>(k), u);
        sign = -sign;
    }
    return out;
}

Complex SmoothingEngine::mellin_R(Complex z) const {
    if (std::abs(z) == 0.0)
        throw std::domain_error("mellin_R: simple pole at z = 0 (residue 1)");
    // R(z) = (c/z) int_{-1}^{1} Phi(t) b^{tz} dt  (substituting u = b^t in
    // the integral of -rho'(u) u^z / z).
    Complex s(0.0, 0.0);
    for (int i = 0; i < cfg_.quadNodes; ++i) {
        double t = glq_x_[i];
        s += glq_w_[i] * phi(t) * std::exp(t * log_b_ * z);
    }
    return c_ / z * s;
}

double SmoothingEngine::omega_eta(double eta, double x) const {
    // Bump on [1, e^eta], scaled so that eta^{-1} * integral = 1.
    double span = std::exp(eta) - 1.0;
    double t = 2.0 * (x - 1.0) / span - 1.0;
    if (t <= -1.0 || t >= 1.0) return 0.0;
    return 2.0 * c_ * eta / span * phi(t);
}

double SmoothingEngine::W_eta(double eta, double u) const {
    double span = std::exp(eta) - 1.0;
    double t = 2.0 * (u - 1.0) / span - 1.0;
    if (t <= -1.0) return 1.0;
    if (t >= 1.0) return 0.0;
    return c_ * phi_integral(t, 1.0);
}

double SmoothingEngine::upsilon_eta(double eta, double u) const {
    return W_eta(eta, u) - W_eta(eta, std::exp(eta) * u);
}

WEtaFamily SmoothingEngine::w_eta_family(double eta) const {
    WEtaFamily f;
    f.eta = eta;
    f.W = [this, eta](double u) { return W_eta(eta, u); };
    f.Omega = [this, eta](double x) { return omega_eta(eta, x); };
    f.Upsilon = [this, eta](double u) { return upsilon_eta(eta, u); };
    return f;
}

WEtaFamily SmoothingEngine::w_eta_family() const { return w_eta_family(cfg_.eta); }

}  // namespace hz
