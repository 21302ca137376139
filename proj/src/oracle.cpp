#include "logitfp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logitfp::oracle {

namespace {

constexpr double kSlopeStep = 1e-6;
constexpr int kMaxBisection = 200;

double bisect_sign_change(const ScalarFn& fn, double a, double b, double fa) {
  for (int i = 0; i < kMaxBisection && b - a > kBisectionTol; ++i) {
    const double mid = 0.5 * (a + b);
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Locates the stationary point of fn inside [a, b] by bisecting on the sign
// of a central difference. Returns false when the slope does not change sign.
bool stationary_point(const ScalarFn& fn, double a, double b, double lo, double hi,
                      double& out) {
  const double h = std::min(1e-7, 0.25 * (b - a));
  auto slope = [&](double x) { return derivative(fn, x, h, lo, hi); };
  double sa = slope(a);
  const double sb = slope(b);
  if (sa == 0.0) {
    out = a;
    return true;
  }
  if (sb == 0.0) {
    out = b;
    return true;
  }
  if ((sa < 0.0) == (sb < 0.0)) return false;
  for (int i = 0; i < kMaxBisection && b - a > kBisectionTol; ++i) {
    const double mid = 0.5 * (a + b);
    const double sm = slope(mid);
    if (sm == 0.0) {
      out = mid;
      return true;
    }
    if ((sm < 0.0) == (sa < 0.0)) {
      a = mid;
      sa = sm;
    } else {
      b = mid;
    }
  }
  out = 0.5 * (a + b);
  return true;
}

}  // namespace

double derivative(const ScalarFn& fn, double x, double h, double lo, double hi) {
  if (x - h >= lo && x + h <= hi) return (fn(x + h) - fn(x - h)) / (2.0 * h);
  if (x - h < lo) {
    return (-3.0 * fn(x) + 4.0 * fn(x + h) - fn(x + 2.0 * h)) / (2.0 * h);
  }
  return (3.0 * fn(x) - 4.0 * fn(x - h) + fn(x - 2.0 * h)) / (2.0 * h);
}

std::vector<double> sign_scan_roots(const ScalarFn& fn, double lo, double hi, int n) {
  if (!(lo < hi) || n < 1000) {
    throw std::invalid_argument("sign_scan_roots: need lo < hi and n >= 1000");
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  std::vector<double> xs(static_cast<std::size_t>(n));
  std::vector<double> fs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[i] = i == n - 1 ? hi : lo + step * static_cast<double>(i);
    fs[i] = fn(xs[i]);
  }

  std::vector<double> roots;
  for (int i = 0; i < n; ++i) {
    if (fs[i] == 0.0) {
      roots.push_back(xs[i]);
    } else if (i + 1 < n && fs[i + 1] != 0.0 && (fs[i] < 0.0) != (fs[i + 1] < 0.0)) {
      roots.push_back(bisect_sign_change(fn, xs[i], xs[i + 1], fs[i]));
    }
  }

  // Tangential roots: interior minima of |f| with the same sign on both sides.
  for (int i = 1; i + 1 < n; ++i) {
    const double a = std::fabs(fs[i - 1]);
    const double m = std::fabs(fs[i]);
    const double b = std::fabs(fs[i + 1]);
    if (!(m <= a && m <= b) || m == 0.0) continue;
    const bool same_sign = (fs[i - 1] < 0.0) == (fs[i] < 0.0) &&
                           (fs[i + 1] < 0.0) == (fs[i] < 0.0) && fs[i - 1] != 0.0 &&
                           fs[i + 1] != 0.0;
    if (!same_sign) continue;
    double x_star = 0.0;
    if (!stationary_point(fn, xs[i - 1], xs[i + 1], lo, hi, x_star)) continue;
    if (std::fabs(fn(x_star)) <= kTangencyResidual) roots.push_back(x_star);
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || r - unique.back() > kDedupSpacing) unique.push_back(r);
  }
  return unique;
}

std::vector<double> logit_roots(GameDeltas d, Rationality beta, int grid_n) {
  const ScalarFn f = [d, beta](double x) { return logit_rhs(d, beta, x); };
  return sign_scan_roots(f, 0.0, 1.0, grid_n);
}

double logit_slope(GameDeltas d, Rationality beta, double x) {
  const ScalarFn f = [d, beta](double s) { return logit_rhs(d, beta, s); };
  return derivative(f, x, kSlopeStep, 0.0, 1.0);
}

}  // namespace logitfp::oracle
