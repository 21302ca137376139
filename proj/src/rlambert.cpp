#include "logitfp/rlambert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "logitfp/errors.hpp"
#include "logitfp/lambertw.hpp"

namespace logitfp {

namespace {

constexpr double kE = 2.718281828459045;
constexpr double kPositiveCap = 800.0;  // e^y overflows past ~709.8
constexpr double kBracketWidth = 1e-13;
constexpr double kResidualTol = 1e-11;
constexpr int kMaxBisection = 200;
constexpr int kMaxPolish = 5;
constexpr int kMaxExpansion = 1100;

void require_positive_r(double r, const char* where) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    std::ostringstream msg;
    msg << where << ": r = " << r << " must be positive and finite";
    throw DomainError(msg.str());
  }
}

bool is_tangent(double z, double critical_value) {
  return std::fabs(z - critical_value) <= kTangencyTol * std::fabs(critical_value);
}

// Bracket [lo, hi] on a piece where f_r is monotone; `increasing` gives the
// orientation so g = +-(f_r - z) is negative at lo.
double refine(double lo, double hi, double r, double z, bool increasing) {
  const double orient = increasing ? 1.0 : -1.0;
  auto g = [&](double y) { return orient * (f_r(y, r) - z); };

  const double g_lo = g(lo);
  const double g_hi = g(hi);
  if (g_lo == 0.0) return lo;
  if (g_hi == 0.0) return hi;

  int it = 0;
  for (; it < kMaxBisection; ++it) {
    const double scale = std::max({1.0, std::fabs(lo), std::fabs(hi)});
    if (hi - lo <= kBracketWidth * scale) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if (gm < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (it == kMaxBisection) {
    std::ostringstream msg;
    msg << "r-Lambert bisection did not converge (r = " << r << ", z = " << z << ")";
    throw ConvergenceError(msg.str());
  }

  double y = 0.5 * (lo + hi);
  double gy = g(y);
  for (int k = 0; k < kMaxPolish && gy != 0.0; ++k) {
    const double slope = orient * ((y + 1.0) * std::exp(y) + r);
    if (slope == 0.0) break;
    const double next = y - gy / slope;
    if (!(next >= lo && next <= hi)) break;
    const double g_next = g(next);
    if (std::fabs(g_next) >= std::fabs(gy)) break;
    y = next;
    gy = g_next;
  }

  if (std::fabs(gy) > kResidualTol * std::max(1.0, std::fabs(z))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "r-Lambert root at y = " << y << " has residual " << std::fabs(gy)
        << " (r = " << r << ", z = " << z << ")";
    throw ConvergenceError(msg.str());
  }
  return y;
}

// Increasing piece extending to -inf: walk left from `start` until f_r <= z.
double solve_leftward(double start, double r, double z) {
  double step = 1.0;
  double prev = start;
  for (int i = 0; i < kMaxExpansion; ++i) {
    const double lo = start - step;
    if (f_r(lo, r) <= z) return refine(lo, prev, r, z, true);
    prev = lo;
    step *= 2.0;
  }
  throw ConvergenceError("r-Lambert: no left bracket found");
}

// Increasing piece extending to +inf, capped where f_r saturates.
double solve_rightward(double start, double r, double z) {
  double step = 1.0;
  double prev = start;
  for (int i = 0; i < kMaxExpansion; ++i) {
    const double hi = std::min(start + step, kPositiveCap);
    if (f_r(hi, r) >= z) return refine(prev, hi, r, z, true);
    if (hi == kPositiveCap) break;
    prev = hi;
    step *= 2.0;
  }
  throw ConvergenceError("r-Lambert: no right bracket found");
}

}  // namespace

double f_r(double y, double r) { return y * std::exp(y) + r * y; }

CriticalPoints critical_points(double r) {
  // r == e^{-2} is kept as the degenerate inflection where both meet at -2.
  if (!(r > 0.0) || !(r <= kRMonotone)) {
    std::ostringstream msg;
    msg << "critical_points: r = " << r << " outside (0, e^-2)";
    throw DomainError(msg.str());
  }
  const double arg = std::max(-r * kE, -kInvE);
  CriticalPoints cp;
  cp.alpha_m1 = lambert_w(Branch::NegativeOne, arg) - 1.0;
  cp.alpha_0 = lambert_w(Branch::Principal, arg) - 1.0;
  cp.f_at_alpha_m1 = f_r(cp.alpha_m1, r);
  cp.f_at_alpha_0 = f_r(cp.alpha_0, r);
  return cp;
}

int predicted_solution_count(double r, double z) {
  require_positive_r(r, "predicted_solution_count");
  if (r >= kRMonotone) return 1;
  const CriticalPoints cp = critical_points(r);
  if (is_tangent(z, cp.f_at_alpha_m1) || is_tangent(z, cp.f_at_alpha_0)) return 2;
  if (z > cp.f_at_alpha_0 && z < cp.f_at_alpha_m1) return 3;
  return 1;
}

RLambertSolutions solve_all(double r, double z) {
  require_positive_r(r, "solve_all");
  if (!std::isfinite(z)) throw DomainError("solve_all: z must be finite");

  RLambertSolutions out;
  out.r = r;
  out.z = z;

  if (r >= kRMonotone) {
    double y = 0.0;
    if (z > 0.0) {
      y = solve_rightward(0.0, r, z);
    } else if (z < 0.0) {
      y = solve_leftward(0.0, r, z);
    }
    out.roots.push_back({y, RootPiece::Monotone});
    return out;
  }

  const CriticalPoints cp = critical_points(r);
  const double local_max = cp.f_at_alpha_m1;
  const double local_min = cp.f_at_alpha_0;
  const bool tangent_max = is_tangent(z, local_max);
  const bool tangent_min = is_tangent(z, local_min);

  if (tangent_max && tangent_min) {
    out.roots.push_back({cp.alpha_m1, RootPiece::AtAlphaM1});
    out.roots.push_back({cp.alpha_0, RootPiece::AtAlpha0});
    return out;
  }

  if (tangent_max) {
    out.roots.push_back({cp.alpha_m1, RootPiece::AtAlphaM1});
  } else if (z < local_max) {
    out.roots.push_back({solve_leftward(cp.alpha_m1, r, z), RootPiece::BelowAlphaM1});
  }

  if (!tangent_max && !tangent_min && z > local_min && z < local_max) {
    out.roots.push_back(
        {refine(cp.alpha_m1, cp.alpha_0, r, z, false), RootPiece::BetweenCritical});
  }

  if (tangent_min) {
    out.roots.push_back({cp.alpha_0, RootPiece::AtAlpha0});
  } else if (z > local_min) {
    out.roots.push_back({solve_rightward(cp.alpha_0, r, z), RootPiece::AboveAlpha0});
  }
  return out;
}

}  // namespace logitfp
