#ifndef LOGITFP_FIXED_POINTS_HPP
#define LOGITFP_FIXED_POINTS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logitfp/dynamics.hpp"
#include "logitfp/game.hpp"
#include "logitfp/lambertw.hpp"

namespace logitfp {

/// beta*|dsp| above this makes e^{beta*dsp} unusable in double precision.
inline constexpr double kMaxExponent = 700.0;
inline constexpr double kMarginalTol = 1e-9;
inline constexpr double kHTieTol = 1e-9;

/// Reparameterization of the fixed-point equation as y*e^y + r*y = k*r,
/// with y = k*x.
struct LogitParams {
  double m = 0.0;  // drt - dsp
  double k = 0.0;  // -beta*m
  double r = 1.0;  // e^{beta*dsp}
};

enum class Stability { Stable, Unstable, Marginal };

enum class Origin { RLambert, AlgebraicK0, Oracle };

struct FixedPoint {
  double x = 0.0;
  double stability_value = 0.0;  // df/dx at x
  Stability stability = Stability::Stable;
  Origin origin = Origin::RLambert;
};

struct FixedPointSet {
  GameDeltas deltas;
  double beta = 0.0;
  std::vector<FixedPoint> points;  // ascending in x
};

enum class BifurcationMechanism { RootOfH0, RootOfHm1, AtLowerBound, NoBifurcation };

struct BifurcationThreshold {
  std::optional<double> beta_r;
  std::optional<double> lower_bound;  // -2/dsp when dsp < 0
  BifurcationMechanism mechanism = BifurcationMechanism::NoBifurcation;
  /// Independent estimate: the h_{-1} root when the count transition is
  /// primary, otherwise unset.
  std::optional<double> cross_check;
};

struct AsymptoticLimit {
  double x = 0.0;
  Stability stability = Stability::Stable;
};

struct SweepRecord {
  double beta = 0.0;
  std::optional<FixedPointSet> set;
  std::string error;  // set only when `set` is empty
};

/// Throws LargeBetaError when beta*|dsp| exceeds kMaxExponent.
LogitParams logit_params(GameDeltas d, Rationality beta);

Stability classify_stability(double value);

/// All fixed points from the r-Lambert roots (x = y/k), or r/(1+r) when k = 0.
FixedPointSet fixed_points_exact(GameDeltas d, Rationality beta);

/// Same set by brute-force scanning logit_rhs on a grid of grid_n points;
/// stability values come from finite differences.
FixedPointSet fixed_points_oracle(GameDeltas d, Rationality beta,
                                  int grid_n = 20000);

/// W_i(-re)^2 + (beta*m - 2) W_i(-re) + 1. Requires dsp < 0 and
/// beta > -2/dsp; throws DomainError otherwise.
double h_branch(GameDeltas d, Rationality beta, Branch i);

/// Fixed-point count from the signs of h_0 and h_{-1}.
int predicted_count(GameDeltas d, Rationality beta);

/// Closed-form df/dx at a fixed point: y^2/k - y - 1 with y = k*x, or -1 when
/// k = 0. Throws PreconditionError if |logit_rhs(x)| > 1e-8.
double stability_value(GameDeltas d, Rationality beta, double fp_x);

/// Smallest beta in (beta_lo, beta_hi] where the oracle sees more than one
/// fixed point, by bisection on the count. Throws ConvergenceError when the
/// count at beta_hi is still 1.
double oracle_count_transition(GameDeltas d, double beta_lo, double beta_hi,
                               int grid_n = 20000);

BifurcationThreshold bifurcation_threshold(GameDeltas d);

/// Nash equilibria tagged with their beta -> infinity stability.
std::vector<AsymptoticLimit> asymptotic_limits(GameDeltas d);

/// Fixed-point sets along a beta grid. Grid points are evaluated in parallel;
/// output order follows the grid. Failures become per-record errors.
std::vector<SweepRecord> sweep(GameDeltas d, std::span<const double> beta_grid);

/// Serial reference for sweep.
std::vector<SweepRecord> sweep_serial(GameDeltas d, std::span<const double> beta_grid);

std::string_view to_string(Stability s);
std::string_view to_string(Origin o);
std::string_view to_string(BifurcationMechanism m);

}  // namespace logitfp

#endif  // LOGITFP_FIXED_POINTS_HPP
