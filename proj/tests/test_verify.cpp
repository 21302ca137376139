#include <doctest.h>

#include "logitfp/verify.hpp"

using namespace logitfp;

TEST_CASE("pitchfork-only grid") {
  const GridSpec grid{{-1.0}, {1.0}, {2.0}};
  const auto report = verify_grid(grid);
  CHECK(report.points_checked == 1);
  CHECK(report.failures == 0);
  REQUIRE(report.records.size() == 1);
  CHECK(report.records[0].in_tangency_band);
  CHECK(report.excluded == 1);
}

TEST_CASE("empty grid") {
  const auto report = verify_grid(GridSpec{});
  CHECK(report.points_checked == 0);
  CHECK(report.failures == 0);
  CHECK(report.records.empty());
  const auto half = verify_grid(GridSpec{{-1.0, 1.0}, {}, {1.0}});
  CHECK(half.points_checked == 0);
}

TEST_CASE("parallel matches serial and JSON is deterministic") {
  const GridSpec grid{{-2.0, -1.0, 0.5}, {-1.0, 1.0, 2.0}, {0.0, 1.5, 2.5, 3.0, 3.5, 10.0}};
  const auto par = verify_grid(grid);
  const auto ser = verify_grid_serial(grid);
  CHECK(par.points_checked == 54);
  CHECK(par.failures == 0);
  const std::string a = to_json(par);
  CHECK(a == to_json(ser));
  CHECK(a == to_json(verify_grid(grid)));
}

TEST_CASE("default grid shape") {
  const GridSpec g = default_grid();
  CHECK(g.dsp.size() == 9);
  CHECK(g.drt.size() == 9);
  CHECK(g.beta.size() == 41);
  CHECK(g.beta.back() == 20.0);
}
