#include "betachain/ergodicity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace betachain {

namespace {

// sup of p over [0, delta] and inf of p over [1-delta, 1] for a piecewise view.
std::pair<double, double> step_extrema(const DirectionFunction::Piecewise& pw, double delta) {
    double sup_left = 0.0;
    double inf_right = 1.0;
    const std::size_t k = pw.levels.size();
    for (std::size_t i = 0; i < k; ++i) {
        // piece i occupies [s[i], s[i+1])
        if (pw.s[i] <= delta) sup_left = std::max(sup_left, pw.levels[i]);
        if (pw.s[i + 1] > 1.0 - delta) inf_right = std::min(inf_right, pw.levels[i]);
    }
    inf_right = std::min(inf_right, pw.levels.back()); // p(1) = p_k
    return {sup_left, inf_right};
}

double sup_linear(const DirectionFunction& p, double delta) {
    // both x -> p(x) and x -> 1 - p(1-x) are affine; extrema at interval ends
    double s = 0.0;
    for (double x : {0.0, delta}) {
        s = std::max(s, p(x));
        s = std::max(s, 1.0 - p(1.0 - x));
    }
    return s;
}

double sup_polynomial(const DirectionFunction& p, double delta) {
    auto g = [&](double x) { return std::max(p(x), 1.0 - p(1.0 - x)); };
    const int n = 10000;
    double best = 0.0;
    double best_x = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = delta * i / n;
        const double v = g(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    // local refinement around the grid argmax
    double lo = std::max(0.0, best_x - delta / n);
    double hi = std::min(delta, best_x + delta / n);
    for (int iter = 0; iter < 60 && hi - lo > 1e-15; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (g(m1) < g(m2))
            lo = m1;
        else
            hi = m2;
        best = std::max(best, std::max(g(m1), g(m2)));
    }
    return best;
}

} // namespace

ErgodicityReport check_e1(const DirectionFunction& p, double delta) {
    if (!(delta > 0.0 && delta < 0.5))
        throw std::domain_error("check_e1: delta must lie in (0, 1/2)");

    double sup;
    if (auto pw = p.as_piecewise()) {
        const auto [sup_left, inf_right] = step_extrema(*pw, delta);
        sup = std::max(sup_left, 1.0 - inf_right);
    } else if (p.kind() == DirectionFunction::Kind::linear) {
        sup = sup_linear(p, delta);
    } else {
        sup = sup_polynomial(p, delta);
    }

    ErgodicityReport rep;
    rep.delta = delta;
    rep.sup = sup;
    rep.epsilon = 1.0 - sup;
    rep.satisfied = sup < 1.0;
    rep.explanation = rep.satisfied
                          ? "sup over [0,delta] of max{p(x), 1-p(1-x)} = " + std::to_string(sup)
                          : "chain can be absorbed near an endpoint (sup = 1)";
    return rep;
}

ErgodicityReport check_e1(const DirectionFunction& p) {
    ErgodicityReport last;
    for (double delta : {0.25, 0.1, 0.01, 0.001}) {
        last = check_e1(p, delta);
        if (last.satisfied) return last;
    }
    return last;
}

} // namespace betachain
