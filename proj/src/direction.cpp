#include "betachain/direction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "betachain/special.hpp"

namespace betachain {

namespace {

void require_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
}

} // namespace

DirectionFunction DirectionFunction::constant(double p0) {
    require_unit(p0, "constant level");
    return DirectionFunction(Constant{p0});
}

DirectionFunction DirectionFunction::linear(double b, double c) {
    if (!(b > 0.0 && b <= 1.0 && c > 0.0 && c <= 1.0))
        throw std::invalid_argument("linear direction function needs b, c in (0,1]");
    return DirectionFunction(Linear{b, c});
}

DirectionFunction DirectionFunction::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("polynomial needs coefficients");
    Polynomial p{std::move(coeffs)};
    // range check on a dense grid
    for (int i = 0; i <= 10000; ++i) {
        const double x = i / 10000.0;
        double v = 0.0;
        for (std::size_t n = p.coeffs.size(); n-- > 0;) v = v * x + p.coeffs[n];
        if (v < -1e-12 || v > 1.0 + 1e-12)
            throw std::invalid_argument("polynomial direction function leaves [0,1]");
    }
    return DirectionFunction(std::move(p));
}

DirectionFunction DirectionFunction::piecewise(std::vector<double> breakpoints,
                                               std::vector<double> levels) {
    if (breakpoints.size() < 2 || levels.size() + 1 != breakpoints.size())
        throw std::invalid_argument("piecewise: need k+1 breakpoints for k levels");
    if (breakpoints.front() != 0.0 || breakpoints.back() != 1.0)
        throw std::invalid_argument("piecewise: breakpoints must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("piecewise: breakpoints must be strictly increasing");
    for (double l : levels) require_unit(l, "piecewise level");
    return DirectionFunction(Piecewise{std::move(breakpoints), std::move(levels)});
}

DirectionFunction DirectionFunction::indicator(double y) {
    if (!(y > 0.0 && y < 1.0))
        throw std::invalid_argument("indicator threshold must lie in (0,1)");
    return DirectionFunction(Indicator{y});
}

DirectionFunction DirectionFunction::search_form(double v, double pivot) {
    if (!(v >= 0.0 && v <= 0.5))
        throw std::invalid_argument("search form needs v in [0,1/2]");
    require_unit(pivot, "search pivot");
    return DirectionFunction(SearchForm{v, pivot});
}

namespace {

double eval_piecewise(const DirectionFunction::Piecewise& pw, double x) {
    if (x >= 1.0) return pw.levels.back();
    auto it = std::upper_bound(pw.s.begin(), pw.s.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - pw.s.begin());
    // x in [s[i-1], s[i])
    return pw.levels[i - 1];
}

struct Eval {
    double x;
    double operator()(const DirectionFunction::Constant& c) const { return c.p0; }
    double operator()(const DirectionFunction::Linear& l) const {
        return l.c * x + (1.0 - l.b) * (1.0 - x);
    }
    double operator()(const DirectionFunction::Polynomial& p) const {
        double v = 0.0;
        for (std::size_t n = p.coeffs.size(); n-- > 0;) v = v * x + p.coeffs[n];
        return std::clamp(v, 0.0, 1.0);
    }
    double operator()(const DirectionFunction::Piecewise& pw) const {
        return eval_piecewise(pw, x);
    }
    double operator()(const DirectionFunction::Indicator& ind) const {
        return x > ind.y ? 1.0 : 0.0;
    }
    double operator()(const DirectionFunction::SearchForm& sf) const {
        return 1.0 - sf.v + (2.0 * sf.v - 1.0) * (x < sf.pivot ? 1.0 : 0.0);
    }
};

} // namespace

double DirectionFunction::operator()(double x) const {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("direction function: x outside [0,1]");
    return std::visit(Eval{x}, v_);
}

double DirectionFunction::left_limit(double x) const {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("direction function: x outside [0,1]");
    const auto jumps = discontinuities();
    for (double s : jumps)
        if (x == s) return (*this)(std::nextafter(x, 0.0));
    if (x == 1.0) return limit_at_one();
    return (*this)(x);
}

DirectionFunction::Kind DirectionFunction::kind() const {
    switch (v_.index()) {
        case 0: return Kind::constant;
        case 1: return Kind::linear;
        case 2: return Kind::polynomial;
        case 3: return Kind::piecewise;
        case 4: return Kind::indicator;
        default: return Kind::search_form;
    }
}

std::vector<double> DirectionFunction::discontinuities() const {
    if (const auto* pw = std::get_if<Piecewise>(&v_)) {
        std::vector<double> s(pw->s.begin() + 1, pw->s.end() - 1);
        std::vector<double> out;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (pw->levels[i] != pw->levels[i + 1]) out.push_back(s[i]);
        return out;
    }
    if (const auto* ind = std::get_if<Indicator>(&v_)) return {ind->y};
    if (const auto* sf = std::get_if<SearchForm>(&v_)) {
        if (sf->v != 0.5 && sf->pivot > 0.0 && sf->pivot < 1.0) return {sf->pivot};
        return {};
    }
    return {};
}

double DirectionFunction::limit_at_zero() const {
    return (*this)(0.0);
}

double DirectionFunction::limit_at_one() const {
    if (const auto* pw = std::get_if<Piecewise>(&v_)) return pw->levels.back();
    if (const auto* ind = std::get_if<Indicator>(&v_)) return ind->y < 1.0 ? 1.0 : 0.0;
    if (const auto* sf = std::get_if<SearchForm>(&v_))
        return sf->pivot < 1.0 ? 1.0 - sf->v : sf->v;
    return (*this)(1.0);
}

std::optional<std::vector<double>> DirectionFunction::coefficients_at_zero() const {
    if (const auto* c = std::get_if<Constant>(&v_)) return std::vector<double>{c->p0};
    if (const auto* l = std::get_if<Linear>(&v_))
        return std::vector<double>{1.0 - l->b, l->c - (1.0 - l->b)};
    if (const auto* p = std::get_if<Polynomial>(&v_)) return p->coeffs;
    return std::nullopt;
}

std::optional<std::vector<double>> DirectionFunction::coefficients_at_one() const {
    const auto p = coefficients_at_zero();
    if (!p) return std::nullopt;
    const std::size_t k = p->size();
    std::vector<double> q(k, 0.0);
    for (std::size_t m = 0; m < k; ++m) {
        long double acc = 0.0L;
        for (std::size_t n = m; n < k; ++n)
            acc += static_cast<long double>(binomial(static_cast<int>(n), static_cast<int>(m))) *
                   static_cast<long double>((*p)[n]);
        q[m] = static_cast<double>(acc);
    }
    return q;
}

std::optional<DirectionFunction::Piecewise> DirectionFunction::as_piecewise() const {
    if (const auto* c = std::get_if<Constant>(&v_))
        return Piecewise{{0.0, 1.0}, {c->p0}};
    if (const auto* pw = std::get_if<Piecewise>(&v_)) return *pw;
    if (const auto* ind = std::get_if<Indicator>(&v_))
        return Piecewise{{0.0, ind->y, 1.0}, {0.0, 1.0}};
    if (const auto* sf = std::get_if<SearchForm>(&v_)) {
        if (sf->pivot <= 0.0) return Piecewise{{0.0, 1.0}, {1.0 - sf->v}};
        if (sf->pivot >= 1.0) return Piecewise{{0.0, 1.0}, {sf->v}};
        return Piecewise{{0.0, sf->pivot, 1.0}, {sf->v, 1.0 - sf->v}};
    }
    return std::nullopt;
}

} // namespace betachain
