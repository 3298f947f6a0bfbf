#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <vector>

#include "betachain/errors.hpp"

namespace betachain {

struct QuadOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    int max_panels = 8000;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair on [-1,1].
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
    double a, b, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

template <class F>
Panel gk15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double k15 = kWgk[7] * fc;
    double g7 = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fs = f(mid - dx) + f(mid + dx);
        k15 += kWgk[i] * fs;
        if (i % 2 == 1) g7 += kWg[i / 2] * fs;
    }
    k15 *= half;
    g7 *= half;
    const double diff = std::fabs(k15 - g7);
    double err = diff;
    const double scaled = std::pow(200.0 * diff, 1.5);
    if (scaled < err) err = scaled;
    return {a, b, k15, err};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a,b].
/// Endpoints are never evaluated (all nodes are interior), so integrable
/// endpoint singularities are tolerated, if slow to converge.
template <class F>
double integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
    if (a == b) return 0.0;
    std::priority_queue<detail::Panel> heap;
    detail::Panel p0 = detail::gk15(f, a, b);
    double total = p0.value;
    double total_err = p0.err;
    heap.push(p0);
    int n = 1;
    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::fabs(total))) {
        if (n >= opt.max_panels)
            throw numeric_error("adaptive quadrature: panel budget exhausted, err=" +
                                std::to_string(total_err));
        detail::Panel worst = heap.top();
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        if (!(m > worst.a && m < worst.b))
            throw numeric_error("adaptive quadrature: interval underflow");
        detail::Panel l = detail::gk15(f, worst.a, m);
        detail::Panel r = detail::gk15(f, m, worst.b);
        total += l.value + r.value - worst.value;
        total_err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        ++n;
    }
    return total;
}

/// Integrate over [a,b] split at the interior points in `splits` (sorted or not).
template <class F>
double integrate_split(F&& f, double a, double b, std::span<const double> splits,
                       const QuadOptions& opt = {}) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double s : splits)
        if (s > a && s < b) pts.push_back(s);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        sum += integrate(f, pts[i], pts[i + 1], opt);
    return sum;
}

/// int_0^d f(x) dx where f(x) = lead * x^po * (1 + O(x)) with po > -1.
/// The power-law leading term is integrated analytically; the remainder
/// vanishes at 0 and is handled numerically.
template <class F>
double integrate_power_left(F&& f, double d, double po, double lead,
                            const QuadOptions& opt = {}) {
    if (d <= 0.0) return 0.0;
    if (po <= -1.0) throw numeric_error("non-integrable endpoint exponent at 0");
    const double analytic = lead * std::pow(d, po + 1.0) / (po + 1.0);
    auto rem = [&](double x) { return f(x) - lead * std::pow(x, po); };
    return analytic + integrate(rem, 0.0, d, opt);
}

/// int_{1-d}^1 f(x) dx where f(x) = lead * (1-x)^po * (1 + O(1-x)), po > -1.
template <class F>
double integrate_power_right(F&& f, double d, double po, double lead,
                             const QuadOptions& opt = {}) {
    if (d <= 0.0) return 0.0;
    if (po <= -1.0) throw numeric_error("non-integrable endpoint exponent at 1");
    const double analytic = lead * std::pow(d, po + 1.0) / (po + 1.0);
    auto rem = [&](double x) { return f(x) - lead * std::pow(1.0 - x, po); };
    return analytic + integrate(rem, 1.0 - d, 1.0, opt);
}

} // namespace betachain
