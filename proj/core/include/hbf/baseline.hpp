#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hbf {

/// Sequential pointer-resolution lookup: `hops` steps, each succeeding with
/// probability p and costing hop_time.
struct ChaseModel {
  double p = 1.0;
  std::uint64_t hops = 1;
  double hop_time = 1.0;

  void validate() const;
};

double chase_success_prob(const ChaseModel& model);
double chase_expected_time(const ChaseModel& model);

struct RepeatTime {
  double value;
  bool overflow;  // true when p^hops underflows or the ratio is not finite
};
/// hops * hop_time / p^hops: retry the whole walk until it succeeds.
RepeatTime chase_expected_time_repeat(const ChaseModel& model);

inline constexpr std::uint64_t kDefaultAttemptCap = 1'000'000'000;

struct ChaseStats {
  std::uint64_t trials = 0;
  std::uint64_t first_attempt_successes = 0;
  double success_rate = 0.0;   // single-attempt success frequency
  double mean_attempts = 0.0;  // walks until success
  double mean_total_time = 0.0;
  double total_time_stderr = 0.0;
  std::uint64_t truncated_trials = 0;  // hit the attempt cap
  std::uint64_t seed = 0;
};

/// Monte Carlo of repeat-until-success. Each trial samples its geometric
/// number of whole-walk attempts from its own derived seed, so aggregates do
/// not depend on trial order.
ChaseStats chase_simulate(const ChaseModel& model, std::uint64_t trials,
                          std::uint64_t seed,
                          std::uint64_t attempt_cap = kDefaultAttemptCap);

struct HbfStats {
  double accuracy = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t rounds = 1;
  std::uint64_t seed = 0;
};

/// One CSV row of the HBF-vs-pointer-chasing comparison.
struct ComparisonRow {
  std::string system;
  double p = 0.0;
  std::uint64_t ell = 0;
  double hop_time = 0.0;
  double success_prob = 0.0;
  double expected_time = 0.0;
  double expected_time_repeat = 0.0;
  double measured_success = 0.0;
  double measured_time_mean = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Rows for the one-shot HBF (one round per query) and the ell-hop chase.
std::vector<ComparisonRow> compare_report(
    const HbfStats& hbf, const ChaseModel& model,
    const std::optional<ChaseStats>& measured = std::nullopt);

}  // namespace hbf
