#include "logitfp/lambertw.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "logitfp/errors.hpp"

namespace logitfp {

namespace {

constexpr double kE = 2.718281828459045;
constexpr int kMaxHalley = 50;
constexpr int kMaxBisection = 400;

// Below this distance from the branch point the series is exact to double
// precision and Halley would only chase rounding noise in the residual.
constexpr double kSeriesOnlyP = 1e-3;
constexpr double kSeriesRegionP = 0.5;

// W around -1/e in powers of q = +-sqrt(2(e*z + 1)); sign selects the branch.
double branch_point_series(double q) {
  return -1.0 +
         q * (1.0 + q * (-1.0 / 3.0 +
                         q * (11.0 / 72.0 +
                              q * (-43.0 / 540.0 + q * (769.0 / 17280.0)))));
}

double asymptotic_guess(double log_abs_z) {
  const double l1 = log_abs_z;
  const double l2 = std::log(std::fabs(l1));
  return l1 - l2 + l2 / l1;
}

double initial_guess(Branch branch, double z, double p) {
  if (branch == Branch::Principal) {
    if (p < kSeriesRegionP) return branch_point_series(p);
    if (z < 3.0) {
      // Winitzki's approximation.
      const double l = std::log1p(z);
      return l * (1.0 - std::log1p(l) / (2.0 + l));
    }
    return asymptotic_guess(std::log(z));
  }
  if (p < kSeriesRegionP) return branch_point_series(-p);
  return asymptotic_guess(std::log(-z));
}

double bisect(Branch branch, double z) {
  double lo, hi;
  if (branch == Branch::Principal) {
    lo = -1.0;
    hi = z > kE ? std::log(z) : 1.0;
  } else {
    lo = 2.0 * std::log(-z) - 1.0;
    hi = -1.0;
  }
  // g is increasing on the principal interval and decreasing on the other.
  const double orient = branch == Branch::Principal ? 1.0 : -1.0;
  for (int i = 0; i < kMaxBisection; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g = orient * (mid * std::exp(mid) - z);
    if (g < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double lambert_w(Branch branch, double z) {
  if (!std::isfinite(z) || z < -kInvE ||
      (branch == Branch::NegativeOne && z >= 0.0)) {
    std::ostringstream msg;
    msg << "lambert_w: z = " << z << " outside the domain of branch "
        << (branch == Branch::Principal ? "0" : "-1");
    throw DomainError(msg.str());
  }
  if (branch == Branch::Principal && z == 0.0) return 0.0;

  // Distance to the branch point, with 1/e carried in two pieces.
  const double d = (z + kInvE) + kInvETail;
  if (d <= 4.0 * std::numeric_limits<double>::min()) return -1.0;
  const double p = std::sqrt(2.0 * kE * d);
  if (p < kSeriesOnlyP) {
    return branch_point_series(branch == Branch::Principal ? p : -p);
  }

  double w = initial_guess(branch, z, p);
  bool converged = false;
  for (int it = 0; it < kMaxHalley; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    if (f == 0.0) {
      converged = true;
      break;
    }
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double dw = f / denom;
    if (!std::isfinite(dw)) break;
    w -= dw;
    if (std::fabs(dw) <= 4.0 * std::numeric_limits<double>::epsilon() *
                             (1.0 + std::fabs(w))) {
      converged = true;
      break;
    }
  }
  if (!converged || !std::isfinite(w)) w = bisect(branch, z);

  return branch == Branch::Principal ? std::fmax(w, -1.0) : std::fmin(w, -1.0);
}

}  // namespace logitfp
