#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support/csv.hpp"

using namespace logitfp;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> with_format(std::vector<std::string> args, const char* format) {
  args.push_back("--format");
  args.push_back(format);
  return args;
}

// Same invocation in CSV and JSON must carry the same values.
void check_equivalent(const std::vector<std::string>& args) {
  const Result csv = run(with_format(args, "csv"));
  const Result js = run(with_format(args, "json"));
  REQUIRE(csv.code == 0);
  REQUIRE(js.code == 0);
  const auto rows = testing::read_csv(csv.out);
  const json arr = json::parse(js.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(arr[i].size() == rows[i].size());
    for (const auto& [key, text] : rows[i]) {
      CAPTURE(key);
      REQUIRE(arr[i].contains(key));
      const json& v = arr[i][key];
      if (v.is_null()) {
        CHECK(text.empty());
      } else if (v.is_boolean()) {
        CHECK(text == (v.get<bool>() ? "true" : "false"));
      } else if (v.is_number()) {
        CHECK(std::strtod(text.c_str(), nullptr) == v.get<double>());
      } else {
        CHECK(text == v.get<std::string>());
      }
    }
  }
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("logitfp_cli_test_" + name);
}

}  // namespace

TEST_CASE("classify") {
  const auto coord = testing::read_csv(run({"classify", "--dsp", "-1", "--drt", "2"}).out);
  REQUIRE(coord.size() == 3);
  CHECK(coord[0].at("quadrant") == "QII");
  CHECK(coord[0].at("x") == "0");
  CHECK(std::stod(coord[1].at("x")) == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK(coord[1].at("kind") == "mixed");
  CHECK(coord[2].at("x") == "1");

  const auto deg = testing::read_csv(run({"classify", "--dsp", "0", "--drt", "0"}).out);
  REQUIRE(deg.size() == 1);
  CHECK(deg[0].at("quadrant") == "Degenerate");
  CHECK(deg[0].at("kind") == "continuum");

  const auto anti = testing::read_csv(run({"classify", "--dsp", "2", "--drt", "-1"}).out);
  REQUIRE(anti.size() == 1);
  CHECK(anti[0].at("quadrant") == "QIV");
  CHECK(std::stod(anti[0].at("x")) == doctest::Approx(2.0 / 3.0).epsilon(1e-16));

  const auto pay = testing::read_csv(run({"classify", "--payoffs", "2,-1,0,0"}).out);
  REQUIRE(pay.size() == 3);
  CHECK(pay[0].at("dsp") == "-1");
  CHECK(pay[0].at("drt") == "2");
}

TEST_CASE("fixed-points") {
  const auto three = testing::read_csv(run({"fixed-points", "--dsp", "-1", "--drt", "1", "--beta", "3"}).out);
  REQUIRE(three.size() == 3);
  CHECK(three[0].at("stability_class") == "stable");
  CHECK(three[1].at("stability_class") == "unstable");
  CHECK(three[2].at("stability_class") == "stable");
  CHECK(three[1].at("origin") == "r-lambert");

  const auto zero = testing::read_csv(run({"fixed-points", "--dsp", "3", "--drt", "-2", "--beta", "0"}).out);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].at("x") == "0.5");
  CHECK(zero[0].at("stability_value") == "-1");
  CHECK(zero[0].at("origin") == "algebraic-k0");

  const auto pitch = testing::read_csv(run({"fixed-points", "--dsp", "-1", "--drt", "1", "--beta", "2"}).out);
  REQUIRE(pitch.size() == 1);
  CHECK(pitch[0].at("stability_class") == "marginal");

  const auto oracle = testing::read_csv(
      run({"fixed-points", "--dsp", "-1", "--drt", "1", "--beta", "3", "--oracle"}).out);
  REQUIRE(oracle.size() == 3);
  for (const auto& row : oracle) CHECK(std::stod(row.at("gap")) < 1e-9);
}

TEST_CASE("sweep") {
  const auto rows = testing::read_csv(run({"sweep", "--dsp", "-1", "--drt", "2", "--beta-min", "0",
                                           "--beta-max", "6", "--steps", "600"})
                                          .out);
  std::vector<const testing::CsvRow*> nash;
  double last_single = -1.0;
  double first_triple = 1e9;
  for (const auto& row : rows) {
    if (row.at("record") == "nash") {
      nash.push_back(&row);
      continue;
    }
    REQUIRE(row.at("record") == "point");
    const double beta = std::stod(row.at("beta"));
    const int count = std::stoi(row.at("count"));
    if (count == 1) last_single = std::max(last_single, beta);
    if (count == 3) first_triple = std::min(first_triple, beta);
  }
  REQUIRE(nash.size() == 3);
  CHECK(nash[1]->at("nash_kind") == "mixed");
  CHECK(nash[1]->at("stability_class") == "unstable");
  CHECK(last_single < first_triple);
  CHECK(last_single <= 3.113);
  CHECK(first_triple >= 3.11);
  CHECK(first_triple - last_single < 0.011);

  CHECK(run({"sweep", "--dsp", "-1", "--drt", "2", "--steps", "0"}).code == cli::kExitUsage);
  CHECK(run({"sweep", "--dsp", "-1", "--drt", "2", "--beta-min", "5", "--beta-max", "1"}).code ==
        cli::kExitUsage);
}

TEST_CASE("sweep reports out-of-range beta as error rows") {
  const Result r = run({"sweep", "--dsp", "-2", "--drt", "1", "--beta-min", "349",
                        "--beta-max", "351", "--steps", "2"});
  CHECK(r.code == 0);
  const auto rows = testing::read_csv(r.out);
  CHECK(rows.back().at("record") == "error");
  CHECK(!rows.back().at("error").empty());
}

TEST_CASE("bifurcation") {
  const auto sym = testing::read_csv(run({"bifurcation", "--dsp", "-1", "--drt", "1"}).out);
  REQUIRE(sym.size() == 1);
  CHECK(std::fabs(std::stod(sym[0].at("beta_r")) - 2.0) < 1e-6);
  CHECK(sym[0].at("mechanism") == "at-lower-bound");

  const auto up = testing::read_csv(run({"bifurcation", "--dsp", "-1", "--drt", "2"}).out);
  CHECK(std::fabs(std::stod(up[0].at("beta_r")) - 3.1129739256371594) < 1e-9);
  CHECK(up[0].at("mechanism") == "root-of-h0");

  const auto none = testing::read_csv(run({"bifurcation", "--dsp", "1", "--drt", "2"}).out);
  CHECK(none[0].at("beta_r").empty());
  CHECK(none[0].at("mechanism") == "none");
}

TEST_CASE("simulate") {
  const auto rows = testing::read_csv(run({"simulate", "--dsp", "1", "--drt", "2", "--beta", "5",
                                           "--x0", "0.2", "--t-end", "1000", "--dt", "0.01"})
                                          .out);
  REQUIRE(rows.size() == 100001);
  CHECK(std::fabs(std::stod(rows.back().at("x")) - 0.9999545918234233) < 1e-6);

  const auto rep = testing::read_csv(run({"simulate", "--dsp", "-1", "--drt", "2", "--x0", "0.5",
                                          "--t-end", "1", "--dt", "0.5", "--protocol",
                                          "replicator"})
                                         .out);
  CHECK(rep.size() == 3);

  CHECK(run({"simulate", "--dsp", "1", "--drt", "2", "--dt", "0"}).code == cli::kExitUsage);
  CHECK(run({"simulate", "--dsp", "1", "--drt", "2", "--x0", "2"}).code == cli::kExitUsage);
  CHECK(run({"simulate", "--dsp", "1", "--drt", "2", "--protocol", "smith"}).code ==
        cli::kExitUsage);
}

TEST_CASE("CSV and JSON carry the same values") {
  check_equivalent({"classify", "--dsp", "-1", "--drt", "2"});
  check_equivalent({"classify", "--dsp", "0", "--drt", "0"});
  check_equivalent({"fixed-points", "--dsp", "-1", "--drt", "1", "--beta", "3", "--oracle"});
  check_equivalent({"sweep", "--dsp", "-2", "--drt", "1", "--beta-max", "5", "--steps", "50"});
  check_equivalent({"bifurcation", "--dsp", "-2", "--drt", "1"});
  check_equivalent({"simulate", "--dsp", "2", "--drt", "-1", "--beta", "4", "--t-end", "2",
                    "--dt", "0.1"});
}

TEST_CASE("argument errors exit 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"classify", "--dsp", "1"}).code == cli::kExitUsage);
  CHECK(run({"classify", "--dsp", "x", "--drt", "1"}).code == cli::kExitUsage);
  CHECK(run({"classify", "--payoffs", "1,2,3"}).code == cli::kExitUsage);
  CHECK(run({"classify", "--payoffs", "1,2,3,4", "--dsp", "1"}).code == cli::kExitUsage);
  CHECK(run({"classify", "--dsp", "1", "--drt", "2", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run({"fixed-points", "--dsp", "1", "--drt", "2"}).code == cli::kExitUsage);
  CHECK(run({"fixed-points", "--dsp", "1", "--drt", "2", "--beta", "-1"}).code == cli::kExitUsage);
  CHECK(run({"fixed-points", "--dsp", "-2", "--drt", "1", "--beta", "400"}).code ==
        cli::kExitUsage);
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("fixed-points") != std::string::npos);
}

TEST_CASE("verify with a grid file and --out") {
  const auto grid_file = temp_path("grid.json");
  const auto report = temp_path("report.json");
  {
    std::ofstream f(grid_file);
    f << R"({"dsp": [-1, 2], "drt": [1, -1], "beta": [0, 2, 3]})";
  }
  const Result r = run({"verify", "--grid-spec", grid_file.string(), "--out", report.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(report);
  const json j = json::parse(in);
  CHECK(j["summary"]["points_checked"] == 12);
  CHECK(j["summary"]["failures"] == 0);
  CHECK(j["records"].size() == 12);

  {
    std::ofstream f(grid_file);
    f << R"({"dsp": [-1], "drt": [1]})";
  }
  CHECK(run({"verify", "--grid-spec", grid_file.string()}).code == cli::kExitUsage);
  {
    std::ofstream f(grid_file);
    f << "not json";
  }
  CHECK(run({"verify", "--grid-spec", grid_file.string()}).code == cli::kExitUsage);
  CHECK(run({"verify", "--grid-spec", temp_path("missing.json").string()}).code ==
        cli::kExitUsage);
  std::filesystem::remove(grid_file);
  std::filesystem::remove(report);
}

TEST_CASE("fixed-points --out writes the file") {
  const auto path = temp_path("fp.csv");
  const Result r = run({"fixed-points", "--dsp", "1", "--drt", "2", "--beta", "5", "--out",
                        path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(testing::read_csv(ss.str()).size() == 1);
  std::filesystem::remove(path);
  CHECK(run({"classify", "--dsp", "1", "--drt", "2", "--out", "/nonexistent/dir/x.csv"}).code ==
        cli::kExitUsage);
}
