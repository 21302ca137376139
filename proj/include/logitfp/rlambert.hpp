#ifndef LOGITFP_RLAMBERT_HPP
#define LOGITFP_RLAMBERT_HPP

#include <vector>

namespace logitfp {

/// e^{-2}: at or above this r, y*e^y + r*y is strictly increasing.
inline constexpr double kRMonotone = 0.1353352832366127;

/// Relative band around f_r(alpha_i) treated as a tangency (double root).
inline constexpr double kTangencyTol = 1e-9;

/// Stationary points of f_r for 0 < r < e^{-2}. alpha_m1 is the local
/// maximum, alpha_0 the local minimum.
struct CriticalPoints {
  double alpha_m1 = 0.0;
  double alpha_0 = 0.0;
  double f_at_alpha_m1 = 0.0;
  double f_at_alpha_0 = 0.0;
};

/// Which monotone piece of f_r a root was found on.
enum class RootPiece {
  Monotone,         // r >= e^{-2}: the whole line
  BelowAlphaM1,     // (-inf, alpha_m1)
  BetweenCritical,  // (alpha_m1, alpha_0)
  AboveAlpha0,      // (alpha_0, inf)
  AtAlphaM1,        // tangency root at the local maximum
  AtAlpha0,         // tangency root at the local minimum
};

struct RLambertRoot {
  double y = 0.0;
  RootPiece piece = RootPiece::Monotone;
};

/// Every real y with y*e^y + r*y = z, ascending.
struct RLambertSolutions {
  double r = 0.0;
  double z = 0.0;
  std::vector<RLambertRoot> roots;
};

/// y*e^y + r*y, evaluated as written. Saturates to +inf for large y.
double f_r(double y, double r);

/// Throws DomainError unless 0 < r < e^{-2}.
CriticalPoints critical_points(double r);

/// Number of real solutions (1, 2 or 3). Throws DomainError for r <= 0.
int predicted_solution_count(double r, double z);

/// All real solutions by bracketed bisection plus Newton polish on each
/// monotone piece of f_r. Throws DomainError for r <= 0 and
/// ConvergenceError when a bracket does not reach the residual tolerance.
RLambertSolutions solve_all(double r, double z);

}  // namespace logitfp

#endif  // LOGITFP_RLAMBERT_HPP
