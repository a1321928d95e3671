#include "hbf/baseline.hpp"

#include <cmath>
#include <limits>

#include "hbf/errors.hpp"
#include "hbf/rng.hpp"

namespace hbf {
namespace {

// Neumaier compensated sum; exact counters plus this keep aggregates
// independent of trial order up to the final rounding.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace

void ChaseModel::validate() const {
  if (!(p > 0.0 && p <= 1.0)) {
    throw InvalidArgument("ChaseModel: p must lie in (0, 1]");
  }
  if (hops < 1) throw InvalidArgument("ChaseModel: hop count must be >= 1");
  if (!(hop_time > 0.0) || !std::isfinite(hop_time)) {
    throw InvalidArgument("ChaseModel: hop time must be finite and positive");
  }
}

double chase_success_prob(const ChaseModel& model) {
  model.validate();
  return std::pow(model.p, static_cast<double>(model.hops));
}

double chase_expected_time(const ChaseModel& model) {
  model.validate();
  return static_cast<double>(model.hops) * model.hop_time;
}

RepeatTime chase_expected_time_repeat(const ChaseModel& model) {
  const double success = chase_success_prob(model);
  const double walk = chase_expected_time(model);
  if (success == 0.0) {
    return {std::numeric_limits<double>::infinity(), true};
  }
  const double value = walk / success;
  if (!std::isfinite(value)) {
    return {std::numeric_limits<double>::infinity(), true};
  }
  return {value, false};
}

ChaseStats chase_simulate(const ChaseModel& model, std::uint64_t trials,
                          std::uint64_t seed, std::uint64_t attempt_cap) {
  model.validate();
  if (trials < 1) throw InvalidArgument("chase_simulate: trials must be >= 1");
  if (attempt_cap < 1) throw InvalidArgument("chase_simulate: attempt cap must be >= 1");

  const double q = chase_success_prob(model);
  const double walk = chase_expected_time(model);
  const double log_miss = std::log1p(-q);
  const auto cap = static_cast<double>(attempt_cap);

  ChaseStats stats;
  stats.trials = trials;
  stats.seed = seed;
  CompensatedSum attempts_sum;
  CompensatedSum time_sum;
  CompensatedSum time_sq_sum;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, "chase-trial", i));
    double attempts = 1.0;
    if (q < 1.0) {
      // Geometric number of whole-walk attempts by inversion.
      attempts = q == 0.0 ? cap + 1.0
                          : 1.0 + std::floor(std::log(rng.uniform_open_low()) / log_miss);
      if (attempts > cap) {
        attempts = cap;
        ++stats.truncated_trials;
      }
    }
    if (attempts == 1.0) ++stats.first_attempt_successes;
    const double time = attempts * walk;
    attempts_sum.add(attempts);
    time_sum.add(time);
    time_sq_sum.add(time * time);
  }
  const auto n = static_cast<double>(trials);
  stats.success_rate = static_cast<double>(stats.first_attempt_successes) / n;
  stats.mean_attempts = attempts_sum.value() / n;
  stats.mean_total_time = time_sum.value() / n;
  if (trials > 1) {
    const double var = std::max(
        0.0, (time_sq_sum.value() - n * stats.mean_total_time * stats.mean_total_time) /
                 (n - 1.0));
    stats.total_time_stderr = std::sqrt(var / n);
  }
  return stats;
}

std::vector<ComparisonRow> compare_report(const HbfStats& hbf,
                                          const ChaseModel& model,
                                          const std::optional<ChaseStats>& measured) {
  model.validate();
  if (!(hbf.accuracy >= 0.0 && hbf.accuracy <= 1.0)) {
    throw InvalidArgument("compare_report: HBF accuracy must lie in [0, 1]");
  }
  std::vector<ComparisonRow> rows;

  ComparisonRow one_shot;
  one_shot.system = "hbf";
  one_shot.p = hbf.accuracy;
  one_shot.ell = hbf.rounds;
  one_shot.hop_time = model.hop_time;
  one_shot.success_prob = hbf.accuracy;
  one_shot.expected_time = static_cast<double>(hbf.rounds) * model.hop_time;
  one_shot.expected_time_repeat =
      hbf.accuracy > 0.0 ? one_shot.expected_time / hbf.accuracy
                         : std::numeric_limits<double>::infinity();
  one_shot.measured_success = hbf.accuracy;
  one_shot.measured_time_mean = one_shot.expected_time_repeat;
  one_shot.trials = hbf.trials;
  one_shot.seed = hbf.seed;
  rows.push_back(one_shot);

  ComparisonRow chase;
  chase.system = "pointer-chase";
  chase.p = model.p;
  chase.ell = model.hops;
  chase.hop_time = model.hop_time;
  chase.success_prob = chase_success_prob(model);
  chase.expected_time = chase_expected_time(model);
  chase.expected_time_repeat = chase_expected_time_repeat(model).value;
  if (measured) {
    chase.measured_success = measured->success_rate;
    chase.measured_time_mean = measured->mean_total_time;
    chase.trials = measured->trials;
    chase.seed = measured->seed;
  } else {
    chase.measured_success = std::numeric_limits<double>::quiet_NaN();
    chase.measured_time_mean = std::numeric_limits<double>::quiet_NaN();
  }
  rows.push_back(chase);
  return rows;
}

}  // namespace hbf
