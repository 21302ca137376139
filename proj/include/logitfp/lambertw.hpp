#ifndef LOGITFP_LAMBERTW_HPP
#define LOGITFP_LAMBERTW_HPP

namespace logitfp {

/// Real branches of the Lambert W function.
enum class Branch {
  Principal,    // W_0, values >= -1, defined on [-1/e, inf)
  NegativeOne,  // W_{-1}, values <= -1, defined on [-1/e, 0)
};

/// 1/e split into a double head and the residual tail.
inline constexpr double kInvE = 0.36787944117144233;
inline constexpr double kInvETail = -1.2428753672788363e-17;

/// Returns w on the requested branch with w*e^w = z.
///
/// Initial guesses come from the branch-point series near -1/e and the
/// logarithmic asymptotics elsewhere; Halley iteration refines them, with a
/// bisection fallback when Halley does not settle within 50 steps.
/// Throws DomainError when z lies outside the branch domain.
double lambert_w(Branch branch, double z);

}  // namespace logitfp

#endif  // LOGITFP_LAMBERTW_HPP
