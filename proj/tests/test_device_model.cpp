#include <gtest/gtest.h>

#include <random>

#include "memdrift/device_model.hpp"
#include "memdrift/errors.hpp"

using namespace memdrift;

namespace {

bool has_message(const ValidationResult& r, const std::string& field, const std::string& msg) {
  for (const auto& v : r.violations) {
    if (v.field == field && v.message == msg) return true;
  }
  return false;
}

DeviceParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  DeviceParams p;
  p.D = 1e-9 * (1.0 + 99.0 * unit(rng));
  p.w0 = p.D * unit(rng);
  p.r_on = 10.0 + 1000.0 * unit(rng);
  p.r_off = p.r_on * (1.5 + 500.0 * unit(rng));
  p.mu_v = 1e-15 * (1.0 + 99.0 * unit(rng));
  p.eta = unit(rng) < 0.5 ? 1 : -1;
  return p;
}

}  // namespace

TEST(ValidateParams, DefaultsAreValid) {
  const DeviceParams p;
  EXPECT_EQ(p.D, 10e-9);
  EXPECT_EQ(p.w0, 2e-9);
  EXPECT_EQ(p.r_on, 100.0);
  EXPECT_EQ(p.r_off, 20000.0);
  EXPECT_EQ(p.mu_v, 1e-14);
  EXPECT_EQ(p.eta, 1);
  EXPECT_TRUE(validate_params(p).ok());
  EXPECT_NO_THROW(require_valid(p));
}

TEST(ValidateParams, W0BeyondDIsRejected) {
  DeviceParams p;
  p.w0 = 12e-9;
  const auto r = validate_params(p);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_message(r, "w0", "w0 exceeds D"));
  EXPECT_EQ(r.violations.front().value, 12e-9);
}

TEST(ValidateParams, EqualResistancesAreRejected) {
  DeviceParams p;
  p.r_on = 100;
  p.r_off = 100;
  const auto r = validate_params(p);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_message(r, "r_off", "r_on must be strictly less than r_off"));
}

TEST(ValidateParams, ReportsEveryViolation) {
  DeviceParams p;
  p.D = -1;
  p.mu_v = 0;
  p.eta = 0;
  const auto r = validate_params(p);
  EXPECT_EQ(r.violations.size(), 3u);
  EXPECT_TRUE(has_message(r, "D", "D must be positive"));
  EXPECT_TRUE(has_message(r, "mu_v", "mu_v must be positive"));
  EXPECT_TRUE(has_message(r, "eta", "eta must be +1 or -1"));
  EXPECT_THROW(require_valid(p), InvalidArgument);
  EXPECT_NE(r.summary().find("eta=0"), std::string::npos);
}

TEST(Memristance, BoundaryIdentities) {
  const DeviceParams p;
  EXPECT_EQ(memristance(p, 0.0), 20000.0);
  EXPECT_EQ(memristance(p, p.D), 100.0);
}

TEST(Memristance, InitialWidth) {
  const DeviceParams p;
  EXPECT_NEAR(memristance(p, 2e-9), 16020.0, 1e-9);
}

TEST(Memristance, RejectsOutOfRangeState) {
  const DeviceParams p;
  EXPECT_THROW(memristance(p, -1e-12), InvalidArgument);
  EXPECT_THROW(memristance(p, 10.1e-9), InvalidArgument);
  EXPECT_THROW(memristance(p, std::nan("")), InvalidArgument);
}

TEST(StateDerivative, Examples) {
  DeviceParams p;
  EXPECT_EQ(state_derivative(p, 0.0), 0.0);
  EXPECT_NEAR(state_derivative(p, 1e-5), 1e-9, 1e-24);
  p.eta = -1;
  EXPECT_NEAR(state_derivative(p, 1e-5), -1e-9, 1e-24);
}

TEST(ClipState, Examples) {
  const DeviceParams p;
  EXPECT_EQ(clip_state(p, 5e-9), std::make_pair(5e-9, false));
  EXPECT_EQ(clip_state(p, 11e-9), std::make_pair(10e-9, true));
  EXPECT_EQ(clip_state(p, -0.1e-9), std::make_pair(0.0, true));
  EXPECT_EQ(clip_state(p, 0.0), std::make_pair(0.0, false));
  EXPECT_EQ(clip_state(p, p.D), std::make_pair(p.D, false));
}

TEST(DeviceModelProperties, RandomizedParameters) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const DeviceParams p = random_params(rng);
    ASSERT_TRUE(validate_params(p).ok());

    // affine and strictly decreasing
    const double a = p.D * unit(rng);
    const double b = p.D * unit(rng);
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    if (hi > lo) {
      EXPECT_GT(memristance(p, lo), memristance(p, hi));
    }
    const double mid = 0.5 * (lo + hi);
    EXPECT_NEAR(memristance(p, mid), 0.5 * (memristance(p, lo) + memristance(p, hi)), 1e-9 * p.r_off);
    EXPECT_EQ(memristance(p, 0.0), p.r_off);
    EXPECT_EQ(memristance(p, p.D), p.r_on);

    // odd in current
    const double i = 1e-3 * (unit(rng) - 0.5);
    EXPECT_EQ(state_derivative(p, -i), -state_derivative(p, i));

    // clipped states always give a memristance inside [r_on, r_off]
    const double w = p.D * (3.0 * unit(rng) - 1.0);
    const auto [clipped, flag] = clip_state(p, w);
    EXPECT_EQ(flag, w < 0 || w > p.D);
    const double m = memristance(p, clipped);
    EXPECT_GE(m, p.r_on);
    EXPECT_LE(m, p.r_off);

    // linear in mu_v and r_on, inverse in D
    if (i != 0.0) {
      const double base = state_derivative(p, i);
      DeviceParams q = p;
      q.mu_v *= 3.0;
      EXPECT_NEAR(state_derivative(q, i) / base, 3.0, 1e-12);
      q = p;
      q.r_on *= 0.5;
      EXPECT_NEAR(state_derivative(q, i) / base, 0.5, 1e-12);
      q = p;
      q.D *= 4.0;
      EXPECT_NEAR(state_derivative(q, i) / base, 0.25, 1e-12);
    }
  }
}
