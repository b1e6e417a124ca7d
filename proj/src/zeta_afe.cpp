#include "heckezeta/zeta_afe.hpp"

#include <cmath>
#include <stdexcept>

namespace hz {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
const double kC0 = 4.0 * kPi * std::exp(kEulerGamma);

// Truncation-error envelope constant, calibrated once against the d = 0
// oracle on a 40-point critical-line grid (t in [5, 60]) and frozen.
constexpr double kErrCal = 6.0;

void afe_exponents(int K, double& alphaK, double& betaK) {
    if (K <= 1) {
        alphaK = 1.0;
        betaK = 1.0;
    } else if (K == 2) {
        alphaK = 2.0;
        betaK = 1.0;
    } else {
        alphaK = (K + 1) / 2.0;
        betaK = (K + 1) / 3.0;
    }
}

// Accelerated alternating sum of sum_{k>=0} (-1)^k a(k) with n stages;
// converges like (3+sqrt 8)^{-n} for totally monotone terms and keeps
// ample headroom for n^{-s} terms with |Im s| <= 60 once n grows with |t|.
template <typename F>
Complex alternating_sum(F a, int n) {
    double dn = std::pow(3.0 + std::sqrt(8.0), n);
    dn = (dn + 1.0 / dn) / 2.0;
    double b = -1.0;
    double c = -dn;
    Complex sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * a(k);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return sum / dn;
}

}  // namespace

Complex zeta_d0_oracle(Complex s) {
    if (std::abs(s - Complex(1.0, 0.0)) < 1e-12)
        throw std::domain_error("zeta_d0_oracle: pole at s = 1");
    int n = 40 + static_cast<int>(2.0 * std::abs(s.imag()));
    Complex eta = alternating_sum(
        [&](int k) { return std::exp(-s * std::log(static_cast<double>(k + 1))); }, n);
    Complex denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
    if (std::abs(denom) < 1e-9)
        throw std::domain_error("zeta_d0_oracle: eta-series route singular near this s");
    Complex zeta = eta / denom;
    Complex l4 = alternating_sum(
        [&](int k) { return std::exp(-s * std::log(static_cast<double>(2 * k + 1))); }, n);
    return zeta * l4;
}

ZetaValue afe_eval(int d, Complex s, const AfeConfig& cfg) {
    double sigma = s.real();
    double t = s.imag();
    if (sigma < -1.0 / 3.0 - 1e-12 || sigma > 4.0 / 3.0 + 1e-12)
        throw std::domain_error("afe_eval: Re(s) outside [-1/3, 4/3]");
    double T = T_of(d, t);

    ZetaValue out;
    out.T = T;

    // Below the smallest admissible conductor both sum lengths collapse to
    // zero terms and the expansion carries no information beyond the pole
    // term. For d = 0 the independent series route covers this regime.
    if (d == 0 && T < T_threshold()) {
        out.value = zeta_d0_oracle(s);
        out.errEstimate = 1e-10;
        return out;
    }

    double ad = 2.0 * std::abs(d);
    if ((std::abs(s - Complex(-ad, 0.0)) < 1e-12) ||
        (std::abs(s - Complex(ad + 1.0, 0.0)) < 1e-12))
        throw std::domain_error("afe_eval: s hits a gamma-factor singularity");

    double b = cfg.smoothing.b;
    double x, y;
    if (cfg.split.balanced) {
        x = y = std::sqrt(T);
    } else {
        x = cfg.split.x;
        y = cfg.split.y;
        if (!(x > 0.0) || !(y > 0.0) || std::abs(x * y - T) > 1e-9 * T)
            throw std::invalid_argument("afe_eval: explicit split must satisfy x*y = T");
        if (b * y < 1.0 / (2.0 * kC0) || b * y > 2.0 * kC0 * T)
            throw std::invalid_argument("afe_eval: dual length b*y outside admissible window");
    }
    out.x = x;
    out.y = y;

    auto nmain = static_cast<std::int64_t>(std::floor(b * x));
    auto ndual = static_cast<std::int64_t>(std::floor(b * y));
    if (nmain > cfg.coeffCap || ndual > cfg.coeffCap)
        throw std::length_error("afe_eval: sum length exceeds coefficient cap");

    SmoothingEngine eng(cfg.smoothing);
    std::int64_t nmax = std::max(nmain, ndual);
    CoeffTable table = nmax >= 1 ? coeff_table(d, nmax) : CoeffTable{d, 0, {}};

    Complex main = 0.0;
    for (std::int64_t n = 1; n <= nmain; ++n) {
        double w = eng.rho(static_cast<double>(n) / x);
        if (w == 0.0) continue;
        double c = table.at(n);
        if (c == 0.0) continue;
        main += w * c * std::exp(-s * std::log(static_cast<double>(n)));
        ++out.termsMain;
    }

    Complex dual = 0.0;
    if (ndual >= 1) {
        std::vector<Complex> a;
        if (cfg.K > 0) a = afe_coefficients(d, s, cfg.K).a;
        Complex sm1 = s - 1.0;
        for (std::int64_t n = 1; n <= ndual; ++n) {
            double u = static_cast<double>(n) / y;
            Complex w = eng.rho_tilde(a, u);
            if (w == Complex(0.0, 0.0)) continue;
            double c = table.at(n);  // delta(Lambda^{-d}, n) = delta(Lambda^d, n)
            if (c == 0.0) continue;
            dual += w * c * std::exp(sm1 * std::log(static_cast<double>(n)));
            ++out.termsDual;
        }
        dual *= X_d(d, s);
    }

    Complex value = main + dual;
    if (d == 0) value += (kPi / 4.0) * std::exp(-std::abs(s - 1.0)) / (s - 1.0);
    out.value = value;

    double alphaK, betaK;
    afe_exponents(cfg.K, alphaK, betaK);
    out.errEstimate = kErrCal * std::pow(T, 1.0 / 6.0 + 0.05) * std::pow(x, 0.5 - sigma) *
                      (std::pow(std::abs(t) / T, alphaK) + std::pow(T, -betaK));
    return out;
}

double fe_residual(int d, Complex s, const AfeConfig& cfg) {
    Complex lhs = afe_eval(d, s, cfg).value;
    Complex rhs = X_d(d, s) * afe_eval(-d, 1.0 - s, cfg).value;
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

ReferenceBounds reference_bounds(int d, Complex s) {
    constexpr double eps = 0.05;
    double sigma = s.real();
    double T = T_of(d, s.imag());
    double expo = std::max({0.0, (1.0 - sigma) / 2.0 + eps, 0.5 - sigma});
    ReferenceBounds out;
    out.convexity = std::pow(T, expo);
    out.subconvexity = std::pow(T, 1.0 / 6.0 + eps);
    return out;
}

WindowMajorant window_majorant(int d, double t, int h, const AfeConfig& cfg) {
    if (h < 1) throw std::invalid_argument("window_majorant: h must be >= 1");
    Complex s(0.5, t);
    WindowMajorant out;
    out.lhs = std::pow(std::abs(afe_eval(d, s, cfg).value), h);

    double eta = cfg.smoothing.eta;
    double T = T_of(d, t);
    double scale = 1.0 / std::sqrt(T);
    SmoothingEngine eng(cfg.smoothing);
    double b = cfg.smoothing.b;
    auto nmax = static_cast<std::int64_t>(std::floor(b * std::exp(2.0 * eta) / scale)) + 1;
    if (nmax > cfg.coeffCap) throw std::length_error("window_majorant: sum too long");
    CoeffTable table = coeff_table(d, std::max<std::int64_t>(nmax, 1));

    auto integrand = [&](double theta) {
        double sc = std::exp(-theta) * scale;
        Complex sum = 0.0;
        for (std::int64_t n = 1; n <= nmax; ++n) {
            double w = eng.rho(static_cast<double>(n) * sc);
            if (w == 0.0) continue;
            double c = table.at(n);
            if (c == 0.0) continue;
            sum += w * c * std::exp(-s * std::log(static_cast<double>(n)));
        }
        return std::pow(std::abs(sum), h);
    };

    const int panels = 64;  // even, composite Simpson
    double lo = -2.0 * eta, hi = 2.0 * eta;
    double step = (hi - lo) / panels;
    double acc = integrand(lo) + integrand(hi);
    for (int i = 1; i < panels; ++i)
        acc += integrand(lo + i * step) * (i % 2 ? 4.0 : 2.0);
    out.rhsIntegral = std::pow(3.0, h) / eta * acc * step / 3.0;
    out.ratio = out.rhsIntegral > 0.0 ? out.lhs / out.rhsIntegral : 0.0;
    return out;
}

}  // namespace hz
