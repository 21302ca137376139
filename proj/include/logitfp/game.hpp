#ifndef LOGITFP_GAME_HPP
#define LOGITFP_GAME_HPP

#include <string_view>
#include <vector>

namespace logitfp {

/// Row-player payoffs: R (1 vs 1), S (1 vs 2), T (2 vs 1), P (2 vs 2).
struct PayoffMatrix {
  double R = 0.0;
  double S = 0.0;
  double T = 0.0;
  double P = 0.0;
};

/// The two payoff gaps the dynamics depend on: dsp = S - P, drt = R - T.
struct GameDeltas {
  double delta_sp = 0.0;
  double delta_rt = 0.0;

  friend bool operator==(const GameDeltas&, const GameDeltas&) = default;
};

enum class Quadrant {
  QI,    // strategy 1 dominant
  QII,   // coordination
  QIII,  // prisoner's dilemma
  QIV,   // anti-coordination
  Degenerate,
};

enum class NashKind { Pure0, Mixed, Pure1 };

struct NashEquilibrium {
  double x = 0.0;
  NashKind kind = NashKind::Pure0;
};

/// Ascending Nash equilibria; `whole_interval` marks the (0,0) game where
/// every state is an equilibrium and `equilibria` is left empty.
struct NashSet {
  std::vector<NashEquilibrium> equilibria;
  bool whole_interval = false;
};

GameDeltas deltas_from_payoffs(const PayoffMatrix& a);

Quadrant classify(GameDeltas d);

/// g(x) = drt*x + dsp*(1 - x). Throws DomainError for x outside [0,1].
double payoff_difference(GameDeltas d, double x);

/// Nash equilibria by the strict clauses: x = 0 needs g(0) < 0, x = 1 needs
/// g(1) > 0, interior x needs g(x) = 0.
NashSet nash_equilibria(GameDeltas d);

std::string_view to_string(Quadrant q);
std::string_view to_string(NashKind k);

}  // namespace logitfp

#endif  // LOGITFP_GAME_HPP
