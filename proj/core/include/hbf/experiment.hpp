#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbf/baseline.hpp"
#include "hbf/calibrate.hpp"
#include "hbf/config.hpp"
#include "hbf/csv.hpp"
#include "hbf/index.hpp"

namespace hbf {

enum class QueryKind { member, non_member };
enum class Outcome { hit_correct, hit_wrong, reject };

std::string_view to_string(QueryKind kind) noexcept;
std::string_view to_string(Outcome outcome) noexcept;

struct TrialRecord {
  std::string experiment;  // "fp", "fn", "amplify-single", ...
  std::uint64_t trial = 0;
  std::uint64_t trial_seed = 0;
  QueryKind kind = QueryKind::member;
  std::string query_key;
  std::string expected_label;  // empty for non-members
  std::string noise;
  std::size_t items = 0;  // n of the memory this trial ran against
  std::uint64_t key_seed = 0;
  std::uint64_t value_seed = 0;
  double tau = 0.0;
  double delta = 0.0;
  Outcome outcome = Outcome::reject;
  std::string decoded_label;
  double s1 = 0.0;
  double s2 = 0.0;
  std::optional<double> true_score;  // <z, v_y> for members
  double runtime_us = 0.0;
};

using SummaryLines = std::vector<std::pair<std::string, std::string>>;

/// What every experiment hands back to the CLI: CSV rows and name=value
/// summary lines.
struct ExperimentReport {
  std::string name;
  CsvTable table;
  SummaryLines summary;
};

/// Synthetic workload shared by the experiments: keys "key-<i>" mapped to
/// labels "label-<i mod |Y|>", codebook seeds derived from the master seed.
struct Workload {
  std::vector<Record> records;
  std::vector<std::string> labels;
  std::uint64_t key_seed = 0;
  std::uint64_t value_seed = 0;
};
Workload make_workload(std::size_t items, std::size_t label_count,
                       std::uint64_t master_seed, std::size_t replica = 0);

struct ResolvedDecoder {
  DecoderConfig config;
  std::optional<Calibration> calibration;
  std::string policy;
};
/// Turns a policy into concrete thresholds for this memory. Calibration runs
/// on its own seed stream.
ResolvedDecoder resolve_decoder(const ExperimentConfig& cfg,
                                const HbfMemory& mem, const LabelSet& labels,
                                std::uint64_t calibration_seed);

struct FpResult {
  ResolvedDecoder decoder;
  std::uint64_t trials = 0;
  std::uint64_t triggers = 0;
  double rate = 0.0;
  double tau_normalized = 0.0;  // tau in units where impostor std is sqrt(d)
  double bound = 0.0;           // fp_bound(|Y|, d, tau_normalized)
  double slack = 0.0;           // 3 sigma binomial slack
  bool within_bound = false;
  std::vector<TrialRecord> records;
};
/// Non-member queries only.
FpResult run_fp_experiment(const ExperimentConfig& cfg);

struct FnResult {
  ResolvedDecoder decoder;
  std::uint64_t trials = 0;
  std::uint64_t correct = 0;
  std::uint64_t rejects = 0;
  std::uint64_t wrong = 0;
  double accuracy = 0.0;
  double reject_rate = 0.0;
  double wrong_rate = 0.0;
  double argmax_accuracy = 0.0;  // correct label ranked first, thresholds aside
  std::size_t key_flips = 0;
  double flip_rate = 0.0;
  double predicted_signal = 0.0;  // signal_mean(d, H, p_e)
  double measured_signal = 0.0;   // mean true score rescaled so mu_hat -> d
  double bound = 0.0;             // fn_bound(d, H, p_e, n) as stated
  double bound_calibrated = 0.0;  // same form with measured mu and sigma
  bool within_bound = false;      // against bound_calibrated + 3 sigma slack
  std::vector<TrialRecord> records;
};
/// Member queries under the configured key and memory noise.
FnResult run_fn_experiment(const ExperimentConfig& cfg);

struct CapacityRow {
  std::size_t items = 0;
  double sigma_hat = 0.0;
  double mu_hat = 0.0;
  double tau = 0.0;
  double delta = 0.0;
  double accuracy = 0.0;
  double reject_rate = 0.0;
  double wrong_rate = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};
struct CapacityResult {
  std::vector<CapacityRow> rows;
};
/// Accuracy and interference spread for each n of an ascending grid at
/// fixed d; each n gets its own memory and calibrated decoder.
CapacityResult run_capacity_sweep(const ExperimentConfig& cfg);

struct AmplifyResult {
  std::size_t replicas = 0;
  std::uint64_t trials = 0;
  std::uint64_t single_errors = 0;
  std::uint64_t voted_errors = 0;
  double single_error_rate = 0.0;
  double voted_error_rate = 0.0;
  std::uint64_t fixed_by_vote = 0;   // single wrong, voted right
  std::uint64_t broken_by_vote = 0;  // single right, voted wrong
  double sign_test_z = 0.0;          // one-sided, over discordant pairs
  bool significant = false;          // z > 1.6449 (95%)
  std::vector<TrialRecord> single_records;
  std::vector<TrialRecord> voted_records;
};
/// Paired comparison of memory 0 alone against an r-memory plurality vote on
/// the same member queries.
AmplifyResult run_amplify_experiment(const ExperimentConfig& cfg);

struct BaselineResult {
  ChaseStats chase;
  HbfStats hbf;
  std::vector<ComparisonRow> rows;
};
/// Pointer-chasing simulation next to a measured one-shot HBF accuracy.
BaselineResult run_baseline_experiment(const ExperimentConfig& cfg);

CsvTable trial_table(const ExperimentConfig& cfg,
                     const std::vector<TrialRecord>& records);
CsvTable capacity_table(const ExperimentConfig& cfg,
                        const CapacityResult& result);
CsvTable comparison_table(const std::vector<ComparisonRow>& rows);

/// Runs cfg.kind and renders CSV and summary lines.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace hbf
