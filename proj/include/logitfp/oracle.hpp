#ifndef LOGITFP_ORACLE_HPP
#define LOGITFP_ORACLE_HPP

#include <functional>
#include <vector>

#include "logitfp/dynamics.hpp"
#include "logitfp/game.hpp"

// Brute-force verification tools. This unit must stay free of the Lambert W
// and r-Lambert code: it only sees the game and the dynamics.
namespace logitfp::oracle {

using ScalarFn = std::function<double(double)>;

inline constexpr int kDefaultGridN = 20000;
inline constexpr double kBisectionTol = 1e-12;
inline constexpr double kTangencyResidual = 1e-8;
inline constexpr double kDedupSpacing = 1e-9;

/// Roots of fn on [lo, hi] from n uniform samples: every sign change is
/// bisected to 1e-12, and local extrema of fn that do not change sign are
/// refined on the derivative and kept when |fn| <= 1e-8 there. Sorted and
/// deduplicated at 1e-9. Requires lo < hi and n >= 1000.
std::vector<double> sign_scan_roots(const ScalarFn& fn, double lo, double hi, int n);

/// Second-order finite difference of fn at x with step h, staying inside
/// [lo, hi] (one-sided stencil near the ends).
double derivative(const ScalarFn& fn, double x, double h, double lo, double hi);

/// Fixed points of the logit dynamics by scanning logit_rhs on [0,1].
std::vector<double> logit_roots(GameDeltas d, Rationality beta, int grid_n = kDefaultGridN);

/// d/dx logit_rhs by finite differences (step 1e-6).
double logit_slope(GameDeltas d, Rationality beta, double x);

}  // namespace logitfp::oracle

#endif  // LOGITFP_ORACLE_HPP
