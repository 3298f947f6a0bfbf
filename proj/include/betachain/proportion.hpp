#pragma once

#include <variant>
#include <vector>

#include "betachain/rng.hpp"

namespace betachain {

/// A jump-proportion distribution on [0,1]: beta(1,z), beta(a,b) with integer
/// first parameter, or a signed finite mixture of beta(1, l_j) densities
/// sum mu_j (1-x)^{l_j - 1} with sum mu_j / l_j = 1.
class ProportionLaw {
public:
    struct BetaOneZ { double z; };
    struct BetaIntFirst { int a; double b; };
    struct MixtureTerm { double mu; double l; };
    struct Mixture { std::vector<MixtureTerm> terms; };

    enum class Kind { beta_one_z, beta_int_first, mixture };

    static ProportionLaw beta1z(double z);
    static ProportionLaw beta_int(int a, double b);
    static ProportionLaw mixture(std::vector<MixtureTerm> terms);

    Kind kind() const;

    double density(double x) const;
    double cdf(double x) const;

    /// Inverse-CDF sample from a single uniform u. Supported for beta(1,z)
    /// (closed form), beta(a,b) with a == 1, and mixtures (composition when
    /// all weights are nonnegative, else monotone bisection on the CDF).
    /// Throws for beta(a,b) with a > 1, which needs a whole stream.
    double sample(double u) const;

    /// Stream-driven sample; handles every variant.
    double sample(RngStream& rng) const;

    /// beta(1,z) and beta_int(1,z) compare equal through this view.
    ProportionLaw canonical() const;
    bool operator==(const ProportionLaw& o) const;

    const BetaOneZ* as_beta1z() const { return std::get_if<BetaOneZ>(&v_); }
    const BetaIntFirst* as_beta_int() const { return std::get_if<BetaIntFirst>(&v_); }
    const Mixture* as_mixture() const { return std::get_if<Mixture>(&v_); }

private:
    using Repr = std::variant<BetaOneZ, BetaIntFirst, Mixture>;
    explicit ProportionLaw(Repr v) : v_(std::move(v)) {}
    Repr v_;
};

} // namespace betachain
