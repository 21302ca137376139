#ifndef LOGITFP_VERIFY_HPP
#define LOGITFP_VERIFY_HPP

#include <string>
#include <vector>

#include "logitfp/game.hpp"

namespace logitfp {

/// Cartesian product dsp x drt x beta, iterated in that nesting order.
struct GridSpec {
  std::vector<double> dsp;
  std::vector<double> drt;
  std::vector<double> beta;
};

struct VerificationRecord {
  GameDeltas deltas;
  double beta = 0.0;
  int exact_count = 0;
  int oracle_count = 0;
  int predicted_count = 0;
  double max_location_gap = 0.0;  // 0 when the counts differ
  bool stability_sign_agreement = true;
  bool in_tangency_band = false;  // within 1e-3 of a detected beta_r
  bool failed = false;
  std::string reason;
};

struct VerificationReport {
  GridSpec grid;
  std::vector<VerificationRecord> records;
  int points_checked = 0;
  int failures = 0;
  int excluded = 0;
};

inline constexpr double kLocationTol = 1e-8;
inline constexpr double kBandHalfWidth = 1e-3;

/// dsp, drt in {-3,-2,-1,-0.5,0,0.5,1,2,3}, beta in {0, 0.5, ..., 20}.
GridSpec default_grid();

/// Runs exact-vs-oracle parity, count-law parity and stability-sign parity
/// over the grid. Grid points are checked in parallel; records keep grid order.
VerificationReport verify_grid(const GridSpec& grid);

/// Serial reference for verify_grid.
VerificationReport verify_grid_serial(const GridSpec& grid);

/// Deterministic JSON rendering (17 significant digits).
std::string to_json(const VerificationReport& report);

}  // namespace logitfp

#endif  // LOGITFP_VERIFY_HPP
