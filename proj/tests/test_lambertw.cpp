#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "logitfp/errors.hpp"
#include "logitfp/lambertw.hpp"
#include "support/scan_oracle.hpp"

using logitfp::Branch;
using logitfp::lambert_w;

namespace {

constexpr double kE = 2.718281828459045;

double residual(double w, double z) { return std::fabs(w * std::exp(w) - z); }

// Samples across the whole branch domain, with the branch point stressed.
std::vector<double> branch_samples(Branch b, int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> zs;
  for (int k = 1; k <= 12; ++k) zs.push_back(-logitfp::kInvE + std::pow(10.0, -k));
  zs.push_back(-logitfp::kInvE);
  while (static_cast<int>(zs.size()) < n) {
    const double u = unit(rng);
    switch (zs.size() % 3) {
      case 0:  // uniform over [-1/e, 0)
        zs.push_back(-logitfp::kInvE * u);
        break;
      case 1:  // log-uniform approach to the branch point
        zs.push_back(-logitfp::kInvE + std::pow(10.0, -16.0 * u));
        break;
      default:
        if (b == Branch::Principal) {
          zs.push_back(std::pow(10.0, -300.0 + 600.0 * u));
        } else {
          zs.push_back(-std::pow(10.0, -300.0 + 299.5 * u));
        }
    }
  }
  std::erase_if(zs, [b](double z) { return b == Branch::NegativeOne && z >= 0.0; });
  return zs;
}

}  // namespace

TEST_CASE("lambert_w reference values") {
  CHECK(lambert_w(Branch::Principal, 0.0) == 0.0);
  CHECK(lambert_w(Branch::Principal, kE) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lambert_w(Branch::NegativeOne, -logitfp::kInvE) == -1.0);
  CHECK(lambert_w(Branch::Principal, -logitfp::kInvE) == -1.0);
  // Frozen from bisection of w*e^w - 1 on [0,1] and w*e^w + 0.1 on [-20,-1].
  CHECK(std::fabs(lambert_w(Branch::Principal, 1.0) - 0.567143290409784) < 1e-15);
  CHECK(std::fabs(lambert_w(Branch::NegativeOne, -0.1) - -3.577152063957297) < 1e-14);
}

TEST_CASE("lambert_w agrees with an independent bisection") {
  using logitfp::testing::lambert_bisect;
  CHECK(std::fabs(lambert_w(Branch::Principal, 1.0) - lambert_bisect(1.0, 0.0, 1.0)) < 1e-14);
  CHECK(std::fabs(lambert_w(Branch::NegativeOne, -0.1) - lambert_bisect(-0.1, -20.0, -1.0)) <
        1e-13);
  for (double z : {-0.3, -0.2, -0.05, -1e-5}) {
    CHECK(std::fabs(lambert_w(Branch::Principal, z) - lambert_bisect(z, -1.0, 1.0)) < 1e-13);
    CHECK(std::fabs(lambert_w(Branch::NegativeOne, z) - lambert_bisect(z, -40.0, -1.0)) < 1e-12);
  }
  for (double z : {0.5, 10.0, 1e3, 1e10}) {
    CHECK(std::fabs(lambert_w(Branch::Principal, z) - lambert_bisect(z, 0.0, 30.0)) < 1e-13);
  }
}

TEST_CASE("lambert_w rejects arguments outside the branch domain") {
  CHECK_THROWS_AS(lambert_w(Branch::Principal, -0.4), logitfp::DomainError);
  CHECK_THROWS_AS(lambert_w(Branch::NegativeOne, -0.4), logitfp::DomainError);
  CHECK_THROWS_AS(lambert_w(Branch::NegativeOne, 0.0), logitfp::DomainError);
  CHECK_THROWS_AS(lambert_w(Branch::NegativeOne, 1.0), logitfp::DomainError);
  CHECK_THROWS_AS(lambert_w(Branch::Principal, std::nan("")), logitfp::DomainError);
  CHECK_THROWS_AS(lambert_w(Branch::Principal, HUGE_VAL), logitfp::DomainError);
}

TEST_CASE("round trip on both branches") {
  for (Branch b : {Branch::Principal, Branch::NegativeOne}) {
    CAPTURE(static_cast<int>(b));
    const auto zs = branch_samples(b, 12000, b == Branch::Principal ? 7 : 11);
    REQUIRE(zs.size() >= 10000);
    int bad = 0;
    for (double z : zs) {
      const double w = lambert_w(b, z);
      const bool ok = residual(w, z) <= 1e-12 * std::fabs(z) + 1e-300 &&
                      residual(w, z) <= 1e-13 * std::max(1.0, std::fabs(z)) &&
                      (b == Branch::Principal ? w >= -1.0 : w <= -1.0);
      if (!ok) {
        ++bad;
        MESSAGE("z = " << z << " w = " << w << " residual " << residual(w, z));
      }
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("branch ordering and monotonicity") {
  std::vector<double> zs;
  for (int i = 1; i < 2000; ++i) zs.push_back(-logitfp::kInvE + logitfp::kInvE * i / 2000.0);
  double prev0 = -HUGE_VAL;
  double prev1 = HUGE_VAL;
  for (double z : zs) {
    const double w0 = lambert_w(Branch::Principal, z);
    const double w1 = lambert_w(Branch::NegativeOne, z);
    CHECK(w1 < -1.0);
    CHECK(-1.0 < w0);
    CHECK(w0 <= 0.0);
    CHECK(w0 > prev0);
    CHECK(w1 < prev1);
    prev0 = w0;
    prev1 = w1;
  }
}
