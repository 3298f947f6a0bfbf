#pragma once

#include <optional>
#include <variant>
#include <vector>

namespace betachain {

/// The probability-of-left-jump function p(x) on [0,1], as a closed family
/// of variants. Immutable after construction; evaluation is pure.
class DirectionFunction {
public:
    enum class Kind { constant, linear, polynomial, piecewise, indicator, search_form };

    struct Constant { double p0; };
    // p(x) = c*x + (1-b)*(1-x), b,c in (0,1]
    struct Linear { double b, c; };
    // monomial coefficients at 0: p(x) = sum coeffs[n] x^n
    struct Polynomial { std::vector<double> coeffs; };
    // p(x) = levels[i] on [s[i], s[i+1]);  p(1) = levels.back()
    struct Piecewise { std::vector<double> s; std::vector<double> levels; };
    // p(x) = 1{x > y}
    struct Indicator { double y; };
    // p(x) = 1 - v + (2v - 1) * 1{x < pivot}
    struct SearchForm { double v, pivot; };

    static DirectionFunction constant(double p0);
    static DirectionFunction linear(double b, double c);
    static DirectionFunction polynomial(std::vector<double> coeffs);
    static DirectionFunction piecewise(std::vector<double> breakpoints,
                                       std::vector<double> levels);
    static DirectionFunction indicator(double y);
    static DirectionFunction search_form(double v, double pivot);

    /// p(x); throws std::domain_error if x is outside [0,1].
    double operator()(double x) const;

    /// Left limit p(x-); differs from p(x) only at jump points.
    double left_limit(double x) const;

    Kind kind() const;

    /// Jump points in (0,1). Empty for the continuous variants.
    std::vector<double> discontinuities() const;

    double limit_at_zero() const;  // p(0+)
    double limit_at_one() const;   // p(1-)

    /// Monomial coefficients at 0 when the variant is a polynomial
    /// (constant / linear / polynomial), otherwise nullopt.
    std::optional<std::vector<double>> coefficients_at_zero() const;

    /// Coefficients q_n of p(x) = sum q_n (x-1)^n, by exact binomial
    /// re-expansion of the stored coefficients at 0.
    std::optional<std::vector<double>> coefficients_at_one() const;

    /// Canonical piecewise-constant view for the step variants
    /// (constant / piecewise / indicator / search_form), otherwise nullopt.
    std::optional<Piecewise> as_piecewise() const;

    template <class Visitor>
    decltype(auto) visit(Visitor&& vis) const {
        return std::visit(std::forward<Visitor>(vis), v_);
    }

private:
    using Repr = std::variant<Constant, Linear, Polynomial, Piecewise, Indicator, SearchForm>;
    explicit DirectionFunction(Repr v) : v_(std::move(v)) {}
    Repr v_;
};

} // namespace betachain
