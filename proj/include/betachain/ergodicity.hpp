#pragma once

#include <string>

#include "betachain/direction.hpp"

namespace betachain {

/// Result of the non-absorption check
///   sup_{x in [0,delta]} max{ p(x), 1 - p(1-x) } < 1.
struct ErgodicityReport {
    bool satisfied = false;
    double delta = 0.0;    // the delta the sup was taken over
    double sup = 1.0;      // the computed supremum
    double epsilon = 0.0;  // 1 - sup
    std::string explanation;
};

/// Check the condition for a given delta in (0, 1/2). Exact for the step-like
/// and affine variants; dense grid with local refinement for polynomials.
ErgodicityReport check_e1(const DirectionFunction& p, double delta);

/// Convenience overload: picks the largest delta in {0.25, 0.1, 0.01, 0.001}
/// that satisfies the condition (the condition only requires existence).
ErgodicityReport check_e1(const DirectionFunction& p);

} // namespace betachain
