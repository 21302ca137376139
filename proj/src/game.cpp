#include "logitfp/game.hpp"

#include <cmath>
#include <sstream>

#include "logitfp/errors.hpp"

namespace logitfp {

GameDeltas deltas_from_payoffs(const PayoffMatrix& a) {
  return {a.S - a.P, a.R - a.T};
}

Quadrant classify(GameDeltas d) {
  const double sp = d.delta_sp;
  const double rt = d.delta_rt;
  if (sp == 0.0 && rt == 0.0) return Quadrant::Degenerate;
  if (sp >= 0.0 && rt >= 0.0) return Quadrant::QI;
  if (sp <= 0.0 && rt <= 0.0) return Quadrant::QIII;
  if (sp < 0.0) return Quadrant::QII;
  return Quadrant::QIV;
}

double payoff_difference(GameDeltas d, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "payoff_difference: x = " << x << " outside [0,1]";
    throw DomainError(msg.str());
  }
  return d.delta_rt * x + d.delta_sp * (1.0 - x);
}

NashSet nash_equilibria(GameDeltas d) {
  NashSet out;
  if (classify(d) == Quadrant::Degenerate) {
    out.whole_interval = true;
    return out;
  }
  if (d.delta_sp < 0.0) out.equilibria.push_back({0.0, NashKind::Pure0});
  const double denom = d.delta_sp - d.delta_rt;
  if (denom != 0.0) {
    const double mixed = d.delta_sp / denom;
    if (mixed > 0.0 && mixed < 1.0) out.equilibria.push_back({mixed, NashKind::Mixed});
  }
  if (d.delta_rt > 0.0) out.equilibria.push_back({1.0, NashKind::Pure1});
  return out;
}

std::string_view to_string(Quadrant q) {
  switch (q) {
    case Quadrant::QI: return "QI";
    case Quadrant::QII: return "QII";
    case Quadrant::QIII: return "QIII";
    case Quadrant::QIV: return "QIV";
    case Quadrant::Degenerate: return "Degenerate";
  }
  return "?";
}

std::string_view to_string(NashKind k) {
  switch (k) {
    case NashKind::Pure0: return "pure0";
    case NashKind::Mixed: return "mixed";
    case NashKind::Pure1: return "pure1";
  }
  return "?";
}

}  // namespace logitfp
