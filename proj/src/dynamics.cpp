#include "logitfp/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "logitfp/errors.hpp"

namespace logitfp {

namespace {

void require_state(double x, const char* where) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << where << ": x = " << x << " outside [0,1]";
    throw DomainError(msg.str());
  }
}

// Unchecked right-hand sides used inside the RK4 stages. Above x = 1/2 the
// logit field is written as (1 - x) - sigma(-t) so f(1) stays negative when
// sigma(t) rounds to 1.
double logit_field(GameDeltas d, double beta, double x) {
  const double t = beta * (d.delta_rt * x + d.delta_sp * (1.0 - x));
  if (x <= 0.5) return logistic(t) - x;
  return (1.0 - x) - logistic(-t);
}

double replicator_field(GameDeltas d, double x) {
  return x * (1.0 - x) * (d.delta_rt * x + d.delta_sp * (1.0 - x));
}

}  // namespace

Rationality::Rationality(double beta) : beta_(beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    std::ostringstream msg;
    msg << "rationality beta = " << beta << " must be finite and >= 0";
    throw DomainError(msg.str());
  }
}

double logistic(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

double logit_choice_probability(GameDeltas d, Rationality beta, double x, Strategy j) {
  const double t = beta.value() * payoff_difference(d, x);
  return j == Strategy::One ? logistic(t) : logistic(-t);
}

double logit_rhs(GameDeltas d, Rationality beta, double x) {
  require_state(x, "logit_rhs");
  return logit_field(d, beta.value(), x);
}

double replicator_rhs(GameDeltas d, double x) {
  require_state(x, "replicator_rhs");
  return x * (1.0 - x) * payoff_difference(d, x);
}

Trajectory integrate(GameDeltas d, Rationality beta, double x0, double t_end,
                     double dt, Protocol which) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("integrate: dt must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw ConfigError("integrate: t_end must be finite and >= 0");
  }
  require_state(x0, "integrate");

  const double b = beta.value();
  auto field = [&](double x) {
    x = std::clamp(x, 0.0, 1.0);
    return which == Protocol::Logit ? logit_field(d, b, x) : replicator_field(d, x);
  };

  const auto full_steps = static_cast<std::size_t>(std::floor(t_end / dt));
  Trajectory traj;
  traj.deltas = d;
  traj.beta = b;
  traj.protocol = which;
  traj.times.reserve(full_steps + 2);
  traj.states.reserve(full_steps + 2);
  traj.times.push_back(0.0);
  traj.states.push_back(x0);

  double x = x0;
  auto step = [&](double h) {
    const double k1 = field(x);
    const double k2 = field(x + 0.5 * h * k1);
    const double k3 = field(x + 0.5 * h * k2);
    const double k4 = field(x + h * k3);
    x = std::clamp(x + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4), 0.0, 1.0);
  };

  for (std::size_t i = 1; i <= full_steps; ++i) {
    step(dt);
    traj.times.push_back(static_cast<double>(i) * dt);
    traj.states.push_back(x);
  }
  const double last = traj.times.back();
  if (t_end - last > 1e-12 * std::max(1.0, t_end)) {
    step(t_end - last);
    traj.times.push_back(t_end);
    traj.states.push_back(x);
  }
  return traj;
}

std::string_view to_string(Protocol p) {
  return p == Protocol::Logit ? "logit" : "replicator";
}

}  // namespace logitfp
