#include <gtest/gtest.h>

#include <algorithm>

#include "memdrift/csv.hpp"
#include "memdrift/sweep.hpp"
#include "test_support.hpp"

using namespace memdrift;
using namespace memdrift::testing;

namespace {

const SweepResult& default_sweep() {
  static const SweepResult r = run_sweep(DeviceParams{}, default_grid(), SimConfig{}, MetricsConfig{});
  return r;
}

std::string grid_error(std::vector<double> a, std::vector<double> f) {
  try {
    build_grid(std::move(a), std::move(f));
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(BuildGrid, Defaults) {
  const auto g = default_grid();
  EXPECT_EQ(g.rows(), 6u);
  EXPECT_EQ(g.cols(), 6u);
  EXPECT_EQ(g.amplitudes, (std::vector<double>{0.2, 0.4, 0.6, 0.8, 1.0, 1.2}));
  EXPECT_EQ(g.frequencies, (std::vector<double>{1, 2, 4, 10, 100, 200}));
}

TEST(BuildGrid, SingleCell) {
  const auto g = build_grid({0.5}, {50});
  EXPECT_EQ(g.rows() * g.cols(), 1u);
}

TEST(BuildGrid, RejectsBadAxes) {
  EXPECT_EQ(grid_error({0.4, 0.2}, {1}), "amplitudes: not strictly increasing at index 1");
  EXPECT_EQ(grid_error({0.2}, {1, 2, 2}), "frequencies: not strictly increasing at index 2");
  EXPECT_EQ(grid_error({0.2, -0.4}, {1}), "amplitudes: non-positive entry at index 1");
  EXPECT_EQ(grid_error({0.2}, {0}), "frequencies: non-positive entry at index 0");
  EXPECT_EQ(grid_error({}, {1}), "amplitudes must be non-empty");
}

TEST(RunSweep, DefaultGridHrsInvariance) {
  const auto& r = default_sweep();
  ASSERT_EQ(r.cells.size(), 36u);
  for (const auto& c : r.cells) EXPECT_NEAR(c.hrs, 16020.0, 16020.0 * 1e-6);
}

TEST(RunSweep, CellsCarryGridCoordinates) {
  const auto& r = default_sweep();
  for (std::size_t i = 0; i < r.grid.rows(); ++i) {
    for (std::size_t j = 0; j < r.grid.cols(); ++j) {
      EXPECT_EQ(r.at(i, j).v0, r.grid.amplitudes[i]);
      EXPECT_EQ(r.at(i, j).freq, r.grid.frequencies[j]);
    }
  }
}

TEST(RunSweep, LrsExtremesSitAtCorners) {
  const auto& r = default_sweep();
  const auto [lo, hi] = std::minmax_element(r.cells.begin(), r.cells.end(),
                                            [](auto& a, auto& b) { return a.lrs < b.lrs; });
  EXPECT_EQ(lo->v0, 1.2);
  EXPECT_EQ(lo->freq, 1.0);
  EXPECT_EQ(hi->v0, 0.2);
  EXPECT_EQ(hi->freq, 200.0);
}

TEST(RunSweep, MonotoneTable) {
  const auto& r = default_sweep();
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (j + 1 < 6) {
        EXPECT_GE(r.at(i, j).window_ratio, r.at(i, j + 1).window_ratio);
        EXPECT_LT(r.at(i, j).lrs, r.at(i, j + 1).lrs);
        EXPECT_GT(r.at(i, j).tau, r.at(i, j + 1).tau);
      }
      if (i + 1 < 6) {
        EXPECT_LE(r.at(i, j).window_ratio, r.at(i + 1, j).window_ratio);
        EXPECT_GT(r.at(i, j).lrs, r.at(i + 1, j).lrs);
        EXPECT_LT(r.at(i, j).tau, r.at(i + 1, j).tau);
      }
    }
  }
}

TEST(RunSweep, SingleCellEqualsDirectCall) {
  const DeviceParams p;
  const SimConfig sim{2000, 0};
  const MetricsConfig mcfg;
  const auto r = run_sweep(p, build_grid({0.5}, {50}), sim, mcfg);
  ASSERT_EQ(r.cells.size(), 1u);
  EXPECT_EQ(r.cells[0], cycle_metrics(simulate(p, {0.5, 50, 0.0, 1}, sim), mcfg));
}

TEST(RunSweep, ParallelMatchesSerialReference) {
  const DeviceParams p;
  const SimConfig sim{2000, 1};
  const auto grid = default_grid();
  const auto serial = run_sweep_serial(p, grid, sim, MetricsConfig{});
  for (int threads : {1, 2, 3, 8}) {
    const auto parallel = run_sweep(p, grid, sim, MetricsConfig{}, threads);
    EXPECT_EQ(parallel, serial) << threads << " threads";
    EXPECT_EQ(metrics_csv(parallel), metrics_csv(serial));
  }
}

TEST(RunSweep, CellsIndependentOfNeighbours) {
  const DeviceParams p;
  const SimConfig sim{1000, 0};
  const auto full = run_sweep(p, default_grid(), sim, MetricsConfig{});
  // drop amplitude row 2 and frequency column 4
  const auto reduced = run_sweep(p, build_grid({0.2, 0.4, 0.8, 1.0, 1.2}, {1, 2, 4, 10, 200}), sim,
                                 MetricsConfig{});
  const std::vector<std::size_t> rows{0, 1, 3, 4, 5};
  const std::vector<std::size_t> cols{0, 1, 2, 3, 5};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      EXPECT_EQ(reduced.at(i, j), full.at(rows[i], cols[j]));
    }
  }
}

TEST(RunSweep, FailureNamesLowestFailingCell) {
  const DeviceParams p;
  const SimConfig sim{100, 0};
  const auto grid = build_grid({0.2, 1e307, 1e308}, {1, 2});
  for (int pass = 0; pass < 2; ++pass) {
    try {
      if (pass == 0) run_sweep(p, grid, sim, MetricsConfig{}, 4);
      else run_sweep_serial(p, grid, sim, MetricsConfig{});
      FAIL() << "expected SweepError";
    } catch (const SweepError& e) {
      EXPECT_EQ(e.v0(), 1e307);
      EXPECT_EQ(e.freq(), 1.0);
      EXPECT_NE(std::string(e.what()).find("f=1 Hz"), std::string::npos);
    }
  }
}

TEST(RunSweep, RejectsInvalidInputsUpFront) {
  EXPECT_THROW(run_sweep(DeviceParams{}, default_grid(), SimConfig{10, 0}, MetricsConfig{}), InvalidArgument);
  EXPECT_THROW(run_sweep(DeviceParams{}, default_grid(), SimConfig{}, MetricsConfig{-1}), InvalidArgument);
  SweepGrid bad{{0.4, 0.2}, {1}};
  EXPECT_THROW(run_sweep(DeviceParams{}, bad, SimConfig{}, MetricsConfig{}), InvalidArgument);
}

TEST(RankLifetime, DefaultGridEnds) {
  const auto ranking = rank_lifetime(default_sweep());
  ASSERT_EQ(ranking.size(), 36u);
  EXPECT_EQ(ranking.front().v0, 1.2);
  EXPECT_EQ(ranking.front().freq, 1.0);
  EXPECT_EQ(ranking.back().v0, 0.2);
  EXPECT_EQ(ranking.back().freq, 200.0);
  for (std::size_t k = 1; k < ranking.size(); ++k) EXPECT_GE(ranking[k - 1].tau, ranking[k].tau);
}

TEST(RankLifetime, SingleCell) {
  const auto r = run_sweep(DeviceParams{}, build_grid({0.5}, {50}), SimConfig{500, 0}, MetricsConfig{});
  const auto ranking = rank_lifetime(r);
  ASSERT_EQ(ranking.size(), 1u);
  EXPECT_EQ(ranking[0].v0, 0.5);
}

TEST(RankLifetime, TiesPreferHigherAmplitudeThenLowerFrequency) {
  SweepResult r;
  r.grid = build_grid({0.2, 0.4}, {1, 2});
  auto cell = [](double v0, double f, double tau) {
    CycleMetrics c;
    c.v0 = v0;
    c.freq = f;
    c.tau = tau;
    return c;
  };
  r.cells = {cell(0.2, 1, 5), cell(0.2, 2, 5), cell(0.4, 1, 5), cell(0.4, 2, 7)};
  const auto ranking = rank_lifetime(r);
  const std::vector<LifetimeEntry> expected{{0.4, 2, 7}, {0.4, 1, 5}, {0.2, 1, 5}, {0.2, 2, 5}};
  EXPECT_EQ(ranking, expected);
}
