#include "logitfp/fixed_points.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "logitfp/errors.hpp"
#include "logitfp/oracle.hpp"
#include "logitfp/rlambert.hpp"

namespace logitfp {

namespace {

constexpr double kFixedPointCheck = 1e-8;
constexpr double kBetaSearchCap = 1e4;
constexpr int kMaxBisection = 200;

double closed_form_slope(double k, double x) {
  if (k == 0.0) return -1.0;
  const double y = k * x;
  return y * y / k - y - 1.0;
}

// Largest beta the exponent guard allows for this game, capped for searches.
double search_cap(GameDeltas d) {
  return std::min(kBetaSearchCap, kMaxExponent / std::fabs(d.delta_sp));
}

// Walks right from `lower` until pred holds, then bisects the boundary.
// pred must be false just above `lower`.
template <class Pred>
double first_true(double lower, double cap, Pred pred, const char* what) {
  double lo = lower;
  double step = 0.5 * std::max(lower, 1.0);
  double hi = lower + step;
  while (!pred(hi)) {
    lo = hi;
    step *= 2.0;
    hi = lower + step;
    if (hi > cap) {
      std::ostringstream msg;
      msg << what << ": no transition below beta = " << cap;
      throw ConvergenceError(msg.str());
    }
  }
  for (int i = 0; i < kMaxBisection && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SweepRecord sweep_point(GameDeltas d, double beta) {
  SweepRecord rec;
  rec.beta = beta;
  try {
    rec.set = fixed_points_exact(d, Rationality(beta));
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

LogitParams logit_params(GameDeltas d, Rationality beta) {
  const double b = beta.value();
  if (b * std::fabs(d.delta_sp) > kMaxExponent) {
    std::ostringstream msg;
    msg << "beta*|dsp| = " << b * std::fabs(d.delta_sp) << " exceeds " << kMaxExponent
        << "; use asymptotic_limits";
    throw LargeBetaError(msg.str());
  }
  LogitParams p;
  p.m = d.delta_rt - d.delta_sp;
  p.k = -b * p.m;
  p.r = std::exp(b * d.delta_sp);
  return p;
}

Stability classify_stability(double value) {
  if (value < -kMarginalTol) return Stability::Stable;
  if (value > kMarginalTol) return Stability::Unstable;
  return Stability::Marginal;
}

FixedPointSet fixed_points_exact(GameDeltas d, Rationality beta) {
  const LogitParams p = logit_params(d, beta);
  FixedPointSet out;
  out.deltas = d;
  out.beta = beta.value();

  if (p.k == 0.0) {
    out.points.push_back({p.r / (1.0 + p.r), -1.0, Stability::Stable, Origin::AlgebraicK0});
    return out;
  }

  const RLambertSolutions sols = solve_all(p.r, p.k * p.r);
  for (const RLambertRoot& root : sols.roots) {
    const double x = std::clamp(root.y / p.k, 0.0, 1.0);
    const double slope = closed_form_slope(p.k, x);
    out.points.push_back({x, slope, classify_stability(slope), Origin::RLambert});
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const FixedPoint& a, const FixedPoint& b) { return a.x < b.x; });
  return out;
}

FixedPointSet fixed_points_oracle(GameDeltas d, Rationality beta, int grid_n) {
  FixedPointSet out;
  out.deltas = d;
  out.beta = beta.value();
  for (double x : oracle::logit_roots(d, beta, grid_n)) {
    const double slope = oracle::logit_slope(d, beta, x);
    out.points.push_back({x, slope, classify_stability(slope), Origin::Oracle});
  }
  return out;
}

double h_branch(GameDeltas d, Rationality beta, Branch i) {
  if (!(d.delta_sp < 0.0)) throw DomainError("h_branch: requires dsp < 0");
  const double lower = -2.0 / d.delta_sp;
  if (!(beta.value() > lower)) {
    std::ostringstream msg;
    msg << "h_branch: beta = " << beta.value() << " not above " << lower;
    throw DomainError(msg.str());
  }
  const LogitParams p = logit_params(d, beta);
  const double arg = std::max(-std::exp(beta.value() * d.delta_sp + 1.0), -kInvE);
  const double w = lambert_w(i, arg);
  return w * w + (beta.value() * p.m - 2.0) * w + 1.0;
}

int predicted_count(GameDeltas d, Rationality beta) {
  const Quadrant q = classify(d);
  if (q != Quadrant::QII && q != Quadrant::QIII) return 1;
  if (!(d.delta_sp < 0.0)) return 1;
  if (beta.value() <= -2.0 / d.delta_sp) return 1;
  const double h_m1 = h_branch(d, beta, Branch::NegativeOne);
  const double h_0 = h_branch(d, beta, Branch::Principal);
  if (std::fabs(h_m1) <= kHTieTol || std::fabs(h_0) <= kHTieTol) return 2;
  if (h_m1 < 0.0 && h_0 > 0.0) return 3;
  return 1;
}

double stability_value(GameDeltas d, Rationality beta, double fp_x) {
  const double residual = logit_rhs(d, beta, fp_x);
  if (std::fabs(residual) > kFixedPointCheck) {
    std::ostringstream msg;
    msg << "stability_value: x = " << fp_x << " is not a fixed point (f = " << residual
        << ")";
    throw PreconditionError(msg.str());
  }
  return closed_form_slope(logit_params(d, beta).k, fp_x);
}

double oracle_count_transition(GameDeltas d, double beta_lo, double beta_hi, int grid_n) {
  auto multiple = [&](double b) {
    return oracle::logit_roots(d, Rationality(b), grid_n).size() > 1;
  };
  if (!multiple(beta_hi)) {
    throw ConvergenceError("oracle_count_transition: single fixed point at beta_hi");
  }
  double lo = beta_lo;
  double hi = beta_hi;
  for (int i = 0; i < kMaxBisection && hi - lo > 1e-12 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (multiple(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

BifurcationThreshold bifurcation_threshold(GameDeltas d) {
  BifurcationThreshold out;
  if (d.delta_sp < 0.0) out.lower_bound = -2.0 / d.delta_sp;
  if (classify(d) != Quadrant::QII) return out;

  const double lower = *out.lower_bound;
  const double cap = search_cap(d);
  const double sum = d.delta_rt + d.delta_sp;
  const double scale = std::max(std::fabs(d.delta_rt), std::fabs(d.delta_sp));

  if (std::fabs(sum) <= 1e-12 * scale) {
    out.beta_r = lower;
    out.mechanism = BifurcationMechanism::AtLowerBound;
    return out;
  }

  if (sum > 0.0) {
    auto h0_positive = [&](double b) {
      return h_branch(d, Rationality(b), Branch::Principal) > 0.0;
    };
    out.beta_r = first_true(lower, cap, h0_positive, "root of h_0");
    out.mechanism = BifurcationMechanism::RootOfH0;
    return out;
  }

  // 0 < drt < -dsp: the observable count transition is primary.
  auto multiple = [&](double b) {
    return oracle::logit_roots(d, Rationality(b)).size() > 1;
  };
  double hi = lower + 0.5 * std::max(lower, 1.0);
  double lo = lower;
  while (!multiple(hi)) {
    lo = hi;
    hi = lower + 2.0 * (hi - lower);
    if (hi > cap) throw ConvergenceError("bifurcation_threshold: no count transition found");
  }
  out.beta_r = oracle_count_transition(d, lo, hi);
  out.mechanism = BifurcationMechanism::RootOfHm1;
  try {
    auto hm1_negative = [&](double b) {
      return h_branch(d, Rationality(b), Branch::NegativeOne) < 0.0;
    };
    out.cross_check = first_true(lower, cap, hm1_negative, "root of h_-1");
  } catch (const ConvergenceError&) {
    // reported as a missing cross-check
  }
  return out;
}

std::vector<AsymptoticLimit> asymptotic_limits(GameDeltas d) {
  const Quadrant q = classify(d);
  if (q == Quadrant::Degenerate) return {{0.5, Stability::Stable}};
  std::vector<AsymptoticLimit> out;
  for (const NashEquilibrium& ne : nash_equilibria(d).equilibria) {
    const bool unstable = q == Quadrant::QII && ne.kind == NashKind::Mixed;
    out.push_back({ne.x, unstable ? Stability::Unstable : Stability::Stable});
  }
  return out;
}

std::vector<SweepRecord> sweep(GameDeltas d, std::span<const double> beta_grid) {
  const auto n = static_cast<std::ptrdiff_t>(beta_grid.size());
  std::vector<SweepRecord> out(beta_grid.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = sweep_point(d, beta_grid[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<SweepRecord> sweep_serial(GameDeltas d, std::span<const double> beta_grid) {
  std::vector<SweepRecord> out;
  out.reserve(beta_grid.size());
  for (double beta : beta_grid) out.push_back(sweep_point(d, beta));
  return out;
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::Marginal: return "marginal";
  }
  return "?";
}

std::string_view to_string(Origin o) {
  switch (o) {
    case Origin::RLambert: return "r-lambert";
    case Origin::AlgebraicK0: return "algebraic-k0";
    case Origin::Oracle: return "oracle";
  }
  return "?";
}

std::string_view to_string(BifurcationMechanism m) {
  switch (m) {
    case BifurcationMechanism::RootOfH0: return "root-of-h0";
    case BifurcationMechanism::RootOfHm1: return "root-of-h-1";
    case BifurcationMechanism::AtLowerBound: return "at-lower-bound";
    case BifurcationMechanism::NoBifurcation: return "none";
  }
  return "?";
}

}  // namespace logitfp
