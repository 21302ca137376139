#include "logitfp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "logitfp/fixed_points.hpp"
#include "logitfp/table.hpp"

namespace logitfp {

namespace {

struct GameThreshold {
  std::optional<double> beta_r;
  std::string error;
};

GameThreshold threshold_for(GameDeltas d) {
  GameThreshold t;
  try {
    t.beta_r = bifurcation_threshold(d).beta_r;
  } catch (const std::exception& e) {
    t.error = e.what();
  }
  return t;
}

void fail(VerificationRecord& rec, const std::string& why) {
  rec.failed = true;
  if (!rec.reason.empty()) rec.reason += "; ";
  rec.reason += why;
}

VerificationRecord verify_point(GameDeltas d, double beta, const GameThreshold& threshold) {
  VerificationRecord rec;
  rec.deltas = d;
  rec.beta = beta;
  rec.in_tangency_band =
      threshold.beta_r && std::fabs(beta - *threshold.beta_r) <= kBandHalfWidth;
  if (!threshold.error.empty()) fail(rec, "threshold: " + threshold.error);

  try {
    const Rationality b(beta);
    const FixedPointSet exact = fixed_points_exact(d, b);
    const FixedPointSet brute = fixed_points_oracle(d, b);
    rec.exact_count = static_cast<int>(exact.points.size());
    rec.oracle_count = static_cast<int>(brute.points.size());
    rec.predicted_count = predicted_count(d, b);

    if (rec.exact_count == rec.oracle_count) {
      for (std::size_t i = 0; i < exact.points.size(); ++i) {
        const FixedPoint& e = exact.points[i];
        const FixedPoint& o = brute.points[i];
        rec.max_location_gap = std::max(rec.max_location_gap, std::fabs(e.x - o.x));
        if (e.stability != Stability::Marginal &&
            (e.stability_value < 0.0) != (o.stability_value < 0.0)) {
          rec.stability_sign_agreement = false;
        }
      }
    }

    if (!rec.stability_sign_agreement) fail(rec, "stability sign mismatch");
    if (!rec.in_tangency_band) {
      if (rec.exact_count != rec.oracle_count) fail(rec, "exact/oracle count mismatch");
      if (rec.predicted_count != rec.oracle_count) fail(rec, "predicted/oracle count mismatch");
      if (rec.max_location_gap > kLocationTol) fail(rec, "location gap above 1e-8");
    }
  } catch (const std::exception& e) {
    fail(rec, e.what());
  }
  return rec;
}

struct GridIndex {
  std::size_t game;
  GameDeltas deltas;
  double beta;
};

std::vector<GameDeltas> games_of(const GridSpec& grid) {
  std::vector<GameDeltas> games;
  for (double sp : grid.dsp)
    for (double rt : grid.drt) games.push_back({sp, rt});
  return games;
}

std::vector<GridIndex> points_of(const GridSpec& grid) {
  std::vector<GridIndex> pts;
  std::size_t g = 0;
  for (double sp : grid.dsp) {
    for (double rt : grid.drt) {
      for (double b : grid.beta) pts.push_back({g, {sp, rt}, b});
      ++g;
    }
  }
  return pts;
}

void summarize(VerificationReport& report) {
  report.points_checked = static_cast<int>(report.records.size());
  report.failures = static_cast<int>(
      std::count_if(report.records.begin(), report.records.end(),
                    [](const VerificationRecord& r) { return r.failed; }));
  report.excluded = static_cast<int>(
      std::count_if(report.records.begin(), report.records.end(),
                    [](const VerificationRecord& r) { return r.in_tangency_band; }));
}

void write_array(std::ostream& out, const std::vector<double>& v) {
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << format_real(v[i]);
  out << ']';
}

}  // namespace

GridSpec default_grid() {
  GridSpec g;
  g.dsp = {-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0};
  g.drt = g.dsp;
  for (int i = 0; i <= 40; ++i) g.beta.push_back(0.5 * i);
  return g;
}

VerificationReport verify_grid(const GridSpec& grid) {
  const std::vector<GameDeltas> games = games_of(grid);
  const std::vector<GridIndex> pts = points_of(grid);

  std::vector<GameThreshold> thresholds(games.size());
  const auto n_games = static_cast<std::ptrdiff_t>(games.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n_games; ++i) {
    thresholds[static_cast<std::size_t>(i)] = threshold_for(games[static_cast<std::size_t>(i)]);
  }

  VerificationReport report;
  report.grid = grid;
  report.records.resize(pts.size());
  const auto n_pts = static_cast<std::ptrdiff_t>(pts.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n_pts; ++i) {
    const GridIndex& p = pts[static_cast<std::size_t>(i)];
    report.records[static_cast<std::size_t>(i)] =
        verify_point(p.deltas, p.beta, thresholds[p.game]);
  }
  summarize(report);
  return report;
}

VerificationReport verify_grid_serial(const GridSpec& grid) {
  std::vector<GameThreshold> thresholds;
  for (const GameDeltas& d : games_of(grid)) thresholds.push_back(threshold_for(d));

  VerificationReport report;
  report.grid = grid;
  for (const GridIndex& p : points_of(grid)) {
    report.records.push_back(verify_point(p.deltas, p.beta, thresholds[p.game]));
  }
  summarize(report);
  return report;
}

std::string to_json(const VerificationReport& report) {
  std::ostringstream out;
  out << "{\n  \"grid\": {\"dsp\": ";
  write_array(out, report.grid.dsp);
  out << ", \"drt\": ";
  write_array(out, report.grid.drt);
  out << ", \"beta\": ";
  write_array(out, report.grid.beta);
  out << "},\n  \"summary\": {\"points_checked\": " << report.points_checked
      << ", \"failures\": " << report.failures << ", \"excluded\": " << report.excluded
      << "},\n  \"records\": [";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const VerificationRecord& r = report.records[i];
    out << (i ? ",\n    " : "\n    ") << "{\"dsp\": " << format_real(r.deltas.delta_sp)
        << ", \"drt\": " << format_real(r.deltas.delta_rt)
        << ", \"beta\": " << format_real(r.beta) << ", \"exact_count\": " << r.exact_count
        << ", \"oracle_count\": " << r.oracle_count
        << ", \"predicted_count\": " << r.predicted_count
        << ", \"max_location_gap\": " << format_real(r.max_location_gap)
        << ", \"stability_sign_agreement\": " << (r.stability_sign_agreement ? "true" : "false")
        << ", \"in_tangency_band\": " << (r.in_tangency_band ? "true" : "false")
        << ", \"failed\": " << (r.failed ? "true" : "false") << ", \"reason\": \""
        << json_escape(r.reason) << "\"}";
  }
  out << (report.records.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

}  // namespace logitfp
