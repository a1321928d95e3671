#include <gtest/gtest.h>

#include <cmath>

#include "hbf/errors.hpp"
#include "hbf/experiment.hpp"

using namespace hbf;

namespace {

ExperimentConfig small(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.dim = 1024;
  cfg.items = 20;
  cfg.label_count = 10;
  cfg.trials = 60;
  cfg.probe_count = 100;
  cfg.master_seed = 3;
  cfg.capacity_grid = {1, 10, 100};
  cfg.chase = {0.9, 5, 1.0};
  return cfg;
}

}  // namespace

TEST(Experiment, Workload) {
  const auto w = make_workload(5, 2, 1);
  ASSERT_EQ(w.records.size(), 5u);
  EXPECT_EQ(w.records[3], (Record{"key-3", "label-1"}));
  EXPECT_EQ(w.labels, (std::vector<std::string>{"label-0", "label-1"}));
  EXPECT_NE(make_workload(5, 2, 1, 1).key_seed, w.key_seed);
  EXPECT_EQ(make_workload(5, 2, 1).value_seed, w.value_seed);
}

TEST(Experiment, EveryKindIsDeterministic) {
  for (auto kind : {ExperimentKind::fp, ExperimentKind::fn, ExperimentKind::capacity,
                    ExperimentKind::baseline, ExperimentKind::amplify}) {
    auto cfg = small(kind);
    cfg.noise = {KeyHamming{20}, MemoryFlip{0.01}};
    const auto a = run_experiment(cfg);
    const auto b = run_experiment(cfg);
    EXPECT_EQ(a.table.to_string(), b.table.to_string()) << to_string(kind);
    EXPECT_EQ(a.summary, b.summary) << to_string(kind);
    cfg.master_seed = 4;
    if (kind != ExperimentKind::baseline) {
      EXPECT_NE(run_experiment(cfg).table.to_string(), a.table.to_string());
    }
  }
}

TEST(Experiment, TimingColumnOnlyWhenAsked) {
  auto cfg = small(ExperimentKind::fn);
  const auto plain = run_experiment(cfg).table;
  EXPECT_EQ(std::count(plain.header().begin(), plain.header().end(), "runtime_us"), 0);
  cfg.record_timing = true;
  const auto timed = run_experiment(cfg).table;
  EXPECT_EQ(timed.header().back(), "runtime_us");
  EXPECT_EQ(timed.without_columns({"runtime_us"}).to_string(), plain.to_string());
}

TEST(Experiment, FpSentinels) {
  auto cfg = small(ExperimentKind::fp);
  cfg.decoder = FixedDecoder{{INFINITY, 0.0, 2}};
  const auto never = run_fp_experiment(cfg);
  EXPECT_EQ(never.rate, 0.0);
  EXPECT_TRUE(never.within_bound);
  cfg.decoder = FixedDecoder{{-INFINITY, 0.0, 2}};
  const auto always = run_fp_experiment(cfg);
  EXPECT_EQ(always.rate, 1.0);
  EXPECT_EQ(always.bound, 1.0);
  EXPECT_TRUE(always.within_bound);
  for (const auto& r : always.records) {
    EXPECT_EQ(r.kind, QueryKind::non_member);
    EXPECT_EQ(r.outcome, Outcome::hit_wrong);
  }
}

TEST(Experiment, FnCleanQueriesSucceed) {
  auto cfg = small(ExperimentKind::fn);
  cfg.dim = 4096;
  cfg.items = 10;
  cfg.trials = 200;
  const auto r = run_fn_experiment(cfg);
  EXPECT_EQ(r.accuracy, 1.0);
  EXPECT_EQ(r.correct + r.rejects + r.wrong, r.trials);
  EXPECT_EQ(r.predicted_signal, 4096.0);
  EXPECT_NEAR(r.measured_signal / r.predicted_signal, 1.0, 0.05);
  EXPECT_TRUE(r.within_bound);
}

TEST(Experiment, FnCollapsesAtHalfFlips) {
  auto cfg = small(ExperimentKind::fn);
  cfg.noise = {KeyHamming{512}};
  cfg.decoder = SignalSplit{};
  cfg.trials = 200;
  const auto r = run_fn_experiment(cfg);
  EXPECT_EQ(r.predicted_signal, 0.0);
  EXPECT_LT(r.accuracy, 0.5);
  EXPECT_GT(r.reject_rate + r.wrong_rate, 0.5);
}

TEST(Experiment, CapacitySweep) {
  auto cfg = small(ExperimentKind::capacity);
  cfg.capacity_grid = {1, 10, 100, 1000};
  cfg.trials = 100;
  const auto r = run_capacity_sweep(cfg);
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(r.rows[0].accuracy, 1.0);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    EXPECT_GT(r.rows[i].sigma_hat, r.rows[i - 1].sigma_hat);
  }
  EXPECT_LT(r.rows.back().accuracy, r.rows.front().accuracy);
  cfg.capacity_grid = {5};
  const auto one = run_experiment(cfg);
  EXPECT_EQ(one.table.rows().size(), 1u);
}

TEST(Experiment, AmplifyWithOneReplicaMatchesSingle) {
  auto cfg = small(ExperimentKind::amplify);
  cfg.replicas = 1;
  const auto r = run_amplify_experiment(cfg);
  EXPECT_EQ(r.single_errors, r.voted_errors);
  EXPECT_EQ(r.fixed_by_vote + r.broken_by_vote, 0u);
  for (std::size_t i = 0; i < r.single_records.size(); ++i) {
    EXPECT_EQ(r.single_records[i].outcome, r.voted_records[i].outcome);
    EXPECT_EQ(r.single_records[i].s1, r.voted_records[i].s1);
  }
}

TEST(Experiment, BaselineRows) {
  auto cfg = small(ExperimentKind::baseline);
  const auto r = run_baseline_experiment(cfg);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].system, "hbf");
  EXPECT_EQ(r.rows[0].ell, 1u);
  EXPECT_EQ(r.rows[1].ell, 5u);
  EXPECT_EQ(comparison_table(r.rows).rows().size(), 2u);
}

TEST(Experiment, RowsCarryRerunParameters) {
  const auto rep = run_experiment(small(ExperimentKind::fn));
  const auto& h = rep.table.header();
  for (const char* col : {"trial_seed", "d", "n", "labels", "rho", "key_seed", "value_seed",
                          "master_seed", "noise", "tau", "delta", "outcome", "s1", "s2"}) {
    EXPECT_NE(std::find(h.begin(), h.end(), col), h.end()) << col;
  }
}

TEST(Experiment, RejectsInvalidConfig) {
  auto cfg = small(ExperimentKind::fn);
  cfg.trials = 0;
  EXPECT_THROW(run_experiment(cfg), InvalidArgument);
}
