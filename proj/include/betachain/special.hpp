#pragma once

namespace betachain {

/// Euler beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
double beta_fn(double a, double b);

/// log B(a,b)
double lbeta_fn(double a, double b);

/// Regularized incomplete beta I_x(a,b), continued-fraction evaluation
/// with the symmetry swap at x > (a+1)/(a+b+2).
double regularized_incomplete_beta(double x, double a, double b);

/// Unnormalized incomplete beta B_x(a,b) = int_0^x t^{a-1}(1-t)^{b-1} dt.
double incomplete_beta(double x, double a, double b);

/// int_lo^hi t^{a-1}(1-t)^{b-1} dt for 0 <= lo <= hi <= 1.
/// Unlike incomplete_beta this accepts a <= 0 (requires lo > 0) and
/// b <= 0 (requires hi < 1); such segments arise in piecewise-beta
/// normalization where only the glued pieces touching an endpoint need
/// the corresponding exponent positive.
double beta_segment(double lo, double hi, double a, double b);

/// Binomial coefficient as a double (exact for the small n used here).
double binomial(int n, int k);

} // namespace betachain
