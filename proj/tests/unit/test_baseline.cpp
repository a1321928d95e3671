#include <gtest/gtest.h>

#include <cmath>

#include "hbf/baseline.hpp"
#include "hbf/errors.hpp"

using namespace hbf;

TEST(Baseline, AnalyticFormulas) {
  const ChaseModel m{0.9, 10, 1.0};
  EXPECT_NEAR(chase_success_prob(m), 0.3486784401, 1e-12);
  EXPECT_EQ(chase_expected_time(m), 10.0);
  const auto r = chase_expected_time_repeat(m);
  EXPECT_FALSE(r.overflow);
  EXPECT_NEAR(r.value, 28.6797, 1e-4);
  EXPECT_EQ(chase_success_prob({1.0, 7, 2.0}), 1.0);
  EXPECT_EQ(chase_expected_time_repeat({1.0, 7, 2.0}).value, 14.0);
  EXPECT_EQ(chase_success_prob({0.3, 1, 1.0}), 0.3);
  EXPECT_EQ(chase_expected_time({0.5, 4, 0.5}), 2.0);
}

TEST(Baseline, RepeatTimeGrowsFasterThanLinear) {
  double prev_ratio = 0;
  for (std::uint64_t ell = 1; ell <= 20; ++ell) {
    const double ratio = chase_expected_time_repeat({0.8, ell, 1.0}).value / double(ell);
    EXPECT_GT(ratio, prev_ratio);
    prev_ratio = ratio;
  }
}

TEST(Baseline, RepeatTimeOverflowIsFlagged) {
  const auto r = chase_expected_time_repeat({1e-10, 100, 1.0});
  EXPECT_TRUE(r.overflow);
  EXPECT_TRUE(std::isinf(r.value));
}

TEST(Baseline, ModelValidation) {
  EXPECT_THROW((ChaseModel{0.0, 1, 1}.validate()), InvalidArgument);
  EXPECT_THROW((ChaseModel{1.1, 1, 1}.validate()), InvalidArgument);
  EXPECT_THROW((ChaseModel{0.5, 0, 1}.validate()), InvalidArgument);
  EXPECT_THROW((ChaseModel{0.5, 1, 0}.validate()), InvalidArgument);
}

TEST(Baseline, SimulationWithCertainHops) {
  const auto s = chase_simulate({1.0, 5, 2.0}, 1000, 3);
  EXPECT_EQ(s.success_rate, 1.0);
  EXPECT_EQ(s.mean_attempts, 1.0);
  EXPECT_EQ(s.mean_total_time, 10.0);
  EXPECT_EQ(s.truncated_trials, 0u);
}

TEST(Baseline, SimulationConvergesToAnalyticValues) {
  const ChaseModel m{0.9, 10, 1.0};
  const auto s = chase_simulate(m, 20000, 11);
  const double p = chase_success_prob(m);
  EXPECT_NEAR(s.success_rate, p, 3 * std::sqrt(p * (1 - p) / 20000));
  EXPECT_NEAR(s.mean_total_time, chase_expected_time_repeat(m).value,
              3 * s.total_time_stderr);
  EXPECT_NEAR(s.mean_attempts, 1 / p, 3 * s.total_time_stderr / 10);
  EXPECT_EQ(s.seed, 11u);
}

TEST(Baseline, SimulationIsDeterministic) {
  const ChaseModel m{0.7, 3, 1.5};
  const auto a = chase_simulate(m, 500, 5);
  const auto b = chase_simulate(m, 500, 5);
  EXPECT_EQ(a.mean_total_time, b.mean_total_time);
  EXPECT_EQ(a.first_attempt_successes, b.first_attempt_successes);
  EXPECT_NE(a.mean_total_time, chase_simulate(m, 500, 6).mean_total_time);
  EXPECT_THROW(chase_simulate(m, 0, 5), InvalidArgument);
}

TEST(Baseline, AttemptCapTruncates) {
  const auto s = chase_simulate({0.01, 5, 1.0}, 50, 1, 10);
  EXPECT_GT(s.truncated_trials, 0u);
  EXPECT_LE(s.mean_attempts, 10.0);
}

TEST(Baseline, CompareReport) {
  const ChaseModel m{0.9, 10, 1.0};
  const HbfStats hbf{0.995, 1000, 1, 4};
  const auto rows = compare_report(hbf, m, chase_simulate(m, 1000, 2));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].system, "hbf");
  EXPECT_EQ(rows[0].ell, 1u);
  EXPECT_EQ(rows[0].success_prob, 0.995);
  EXPECT_EQ(rows[1].system, "pointer-chase");
  EXPECT_EQ(rows[1].ell, 10u);
  EXPECT_NEAR(rows[1].success_prob, 0.3486784401, 1e-12);
  EXPECT_NEAR(rows[1].expected_time_repeat, 28.6797, 1e-4);
  EXPECT_EQ(rows[1].trials, 1000u);
  EXPECT_EQ(compare_report(hbf, m).size(), 2u);
}
