#ifndef LOGITFP_DYNAMICS_HPP
#define LOGITFP_DYNAMICS_HPP

#include <string_view>
#include <vector>

#include "logitfp/game.hpp"

namespace logitfp {

/// Logit rationality level beta >= 0.
class Rationality {
 public:
  /// Throws DomainError for negative or non-finite beta.
  explicit Rationality(double beta);
  double value() const { return beta_; }

 private:
  double beta_;
};

enum class Strategy { One, Two };

enum class Protocol { Logit, Replicator };

struct Trajectory {
  std::vector<double> times;
  std::vector<double> states;
  GameDeltas deltas;
  double beta = 0.0;
  Protocol protocol = Protocol::Logit;
};

/// 1 / (1 + e^{-t}) without overflow for either sign of t.
double logistic(double t);

/// Logit choice probability of strategy j at state x. The probability only
/// depends on the payoffs through g(x), so the deltas are enough.
double logit_choice_probability(GameDeltas d, Rationality beta, double x, Strategy j);

/// Logit mean dynamics: sigma(beta*g(x)) - x.
double logit_rhs(GameDeltas d, Rationality beta, double x);

/// Replicator equation: x(1 - x) g(x).
double replicator_rhs(GameDeltas d, double x);

/// Fixed-step RK4 from x0 to t_end. States are clamped to [0,1] after each
/// step; the last step is shortened to land on t_end.
Trajectory integrate(GameDeltas d, Rationality beta, double x0, double t_end,
                     double dt, Protocol which);

std::string_view to_string(Protocol p);

}  // namespace logitfp

#endif  // LOGITFP_DYNAMICS_HPP
