#include "betachain/special.hpp"

#include <cmath>
#include <stdexcept>

#include "betachain/errors.hpp"
#include "betachain/quadrature.hpp"

namespace betachain {

double lbeta_fn(double a, double b) {
    if (a <= 0.0 || b <= 0.0) throw std::domain_error("beta_fn: parameters must be positive");
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta_fn(double a, double b) {
    if (a <= 0.0 || b <= 0.0) throw std::domain_error("beta_fn: parameters must be positive");
    // tgamma is a few ulp; prefer it while it cannot overflow.
    if (a + b < 170.0) return std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b);
    return std::exp(lbeta_fn(a, b));
}

namespace {

// Modified Lentz evaluation of the incomplete-beta continued fraction.
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-14;
    constexpr double kTiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw numeric_error("incomplete beta: continued fraction did not converge");
}

} // namespace

double regularized_incomplete_beta(double x, double a, double b) {
    if (a <= 0.0 || b <= 0.0)
        throw std::domain_error("incomplete_beta: parameters must be positive");
    if (x < 0.0 || x > 1.0) throw std::domain_error("incomplete_beta: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double front =
        std::exp(a * std::log(x) + b * std::log1p(-x) - lbeta_fn(a, b));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double incomplete_beta(double x, double a, double b) {
    return regularized_incomplete_beta(x, a, b) * beta_fn(a, b);
}

double beta_segment(double lo, double hi, double a, double b) {
    if (!(0.0 <= lo && lo <= hi && hi <= 1.0))
        throw std::domain_error("beta_segment: bad interval");
    if (lo == hi) return 0.0;
    if (a > 0.0 && b > 0.0)
        return incomplete_beta(hi, a, b) - incomplete_beta(lo, a, b);

    auto integrand = [&](double t) {
        return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0);
    };
    QuadOptions opt;
    opt.rel_tol = 1e-13;
    if (a <= 0.0) {
        if (lo <= 0.0)
            throw std::domain_error("beta_segment: a <= 0 requires lo > 0");
        if (hi == 1.0 && b < 1.0) {
            // substitute u = (1-t)^b; bounded integrand on (0, (1-lo)^b]
            auto g = [&](double u) {
                const double t = 1.0 - std::pow(u, 1.0 / b);
                return std::pow(t, a - 1.0) / b;
            };
            return integrate(g, 0.0, std::pow(1.0 - lo, b), opt);
        }
        return integrate(integrand, lo, hi, opt);
    }
    // b <= 0
    if (hi >= 1.0)
        throw std::domain_error("beta_segment: b <= 0 requires hi < 1");
    if (lo == 0.0 && a < 1.0) {
        // substitute u = t^a; bounded integrand on (0, hi^a]
        auto g = [&](double u) {
            const double t = std::pow(u, 1.0 / a);
            return std::pow(1.0 - t, b - 1.0) / a;
        };
        return integrate(g, 0.0, std::pow(hi, a), opt);
    }
    return integrate(integrand, lo, hi, opt);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace betachain
