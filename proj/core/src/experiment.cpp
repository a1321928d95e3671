#include "hbf/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "hbf/amplify.hpp"
#include "hbf/bounds.hpp"
#include "hbf/errors.hpp"
#include "hbf/noise.hpp"
#include "hbf/rng.hpp"

namespace hbf {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Neumaier-compensated running sum; keeps means independent of trial count
// rounding drift.
class Sum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::string noise_label(const std::vector<NoiseChannel>& channels) {
  std::string out;
  for (const auto& c : channels) {
    if (!out.empty()) out += ';';
    out += to_string(c);
  }
  return out.empty() ? "none" : out;
}

bool has_memory_noise(const std::vector<NoiseChannel>& channels) {
  return std::any_of(channels.begin(), channels.end(),
                     [](const NoiseChannel& c) { return acts_on_memory(c); });
}

// One memory with everything needed to query it.
struct Store {
  Workload workload;
  HbfMemory memory;
  LabelSet labels;
  Codebook keys;
};

Store make_store(const ExperimentConfig& cfg, std::size_t items,
                 std::size_t replica) {
  auto workload = make_workload(items, cfg.label_count, cfg.master_seed, replica);
  auto memory = build(workload.records, cfg.dim, cfg.gain, workload.key_seed,
                      workload.value_seed);
  LabelSet labels(workload.labels, workload.value_seed, cfg.dim);
  Codebook keys(std::string(kKeyNamespace), workload.key_seed, cfg.dim);
  return {std::move(workload), std::move(memory), std::move(labels), std::move(keys)};
}

ResolvedDecoder resolve_for(const ExperimentConfig& cfg, const Store& store,
                            std::uint64_t stream_seed) {
  // The calibration memory sees the same noise model as the evaluation
  // memories, drawn from its own stream.
  const auto cal_seed = derive_seed(stream_seed, "calibration", 0);
  if (has_memory_noise(cfg.noise)) {
    const auto noisy = apply_memory_noise(
        store.memory, cfg.noise, derive_seed(stream_seed, "calibration-memory", 0));
    return resolve_decoder(cfg, noisy, store.labels, cal_seed);
  }
  return resolve_decoder(cfg, store.memory, store.labels, cal_seed);
}

struct QueryResult {
  DecodeOutcome outcome;
  std::optional<double> true_score;
  bool argmax_correct = false;
  double runtime_us = 0.0;
};

QueryResult run_query(const ExperimentConfig& cfg, const Store& store,
                      const DecoderConfig& decoder, std::string_view key,
                      std::string_view expected, std::uint64_t trial_seed,
                      std::size_t replica) {
  std::optional<HbfMemory> noisy;
  if (has_memory_noise(cfg.noise)) {
    noisy = apply_memory_noise(store.memory, cfg.noise,
                               derive_seed(trial_seed, "memory", replica));
  }
  const HbfMemory& mem = noisy ? *noisy : store.memory;
  const HyperVector key_vector = apply_key_noise(
      store.keys.vector(key), cfg.noise, derive_seed(trial_seed, "key", replica));

  const auto start = std::chrono::steady_clock::now();
  const auto scores = score_codebook(correlate_query(mem, key_vector), store.labels);
  QueryResult out;
  out.outcome = decide(scores, decoder);
  const auto stop = std::chrono::steady_clock::now();
  if (cfg.record_timing) {
    out.runtime_us = std::chrono::duration<double, std::micro>(stop - start).count();
  }
  if (!expected.empty()) {
    out.argmax_correct = scores.front().label == expected;
    for (const auto& s : scores) {
      if (s.label == expected) {
        out.true_score = s.score;
        break;
      }
    }
  }
  return out;
}

Outcome classify(const DecodeOutcome& outcome, std::string_view expected) {
  if (!outcome.hit) return Outcome::reject;
  return !expected.empty() && outcome.label == expected ? Outcome::hit_correct
                                                        : Outcome::hit_wrong;
}

TrialRecord make_record(const ExperimentConfig& cfg, const Store& store,
                        std::string experiment, const DecoderConfig& decoder,
                        std::uint64_t trial, std::uint64_t trial_seed,
                        QueryKind kind, std::string key, std::string expected,
                        const QueryResult& result) {
  TrialRecord r;
  r.experiment = std::move(experiment);
  r.trial = trial;
  r.trial_seed = trial_seed;
  r.kind = kind;
  r.query_key = std::move(key);
  r.outcome = classify(result.outcome, expected);
  r.expected_label = std::move(expected);
  r.noise = noise_label(cfg.noise);
  r.items = store.workload.records.size();
  r.key_seed = store.workload.key_seed;
  r.value_seed = store.workload.value_seed;
  r.tau = decoder.tau;
  r.delta = decoder.delta;
  r.decoded_label = result.outcome.hit ? result.outcome.label : "";
  r.s1 = result.outcome.best_score;
  r.s2 = result.outcome.runner_up;
  r.true_score = result.true_score;
  r.runtime_us = result.runtime_us;
  return r;
}

// Picks the stored record a member trial asks for.
const Record& pick_member(const Store& store, std::uint64_t trial_seed) {
  Rng rng(derive_seed(trial_seed, "member", 0));
  return store.workload.records[rng.below(store.workload.records.size())];
}

double predicted_signal(double d, std::size_t flips, double flip_rate) {
  if (2.0 * static_cast<double>(flips) > d || !(flip_rate < 0.5)) return kNaN;
  return bounds::signal_mean(d, static_cast<double>(flips), flip_rate);
}

double binomial_slack(double p, std::uint64_t trials) {
  const double q = std::clamp(p, 0.0, 1.0);
  return 3.0 * std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string_view to_string(QueryKind kind) noexcept {
  return kind == QueryKind::member ? "member" : "non-member";
}

std::string_view to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::hit_correct: return "hit-correct";
    case Outcome::hit_wrong: return "hit-wrong";
    case Outcome::reject: return "reject";
  }
  return "unknown";
}

Workload make_workload(std::size_t items, std::size_t label_count,
                       std::uint64_t master_seed, std::size_t replica) {
  if (label_count == 0) throw InvalidArgument("make_workload: label_count must be >= 1");
  Workload w;
  w.records.reserve(items);
  for (std::size_t i = 0; i < items; ++i) {
    w.records.push_back({"key-" + std::to_string(i),
                         "label-" + std::to_string(i % label_count)});
  }
  w.labels.reserve(label_count);
  for (std::size_t i = 0; i < label_count; ++i) {
    w.labels.push_back("label-" + std::to_string(i));
  }
  w.key_seed = derive_seed(master_seed, "key-codebook", replica);
  w.value_seed = derive_seed(master_seed, "value-codebook", replica);
  return w;
}

ResolvedDecoder resolve_decoder(const ExperimentConfig& cfg,
                                const HbfMemory& mem, const LabelSet& labels,
                                std::uint64_t calibration_seed) {
  ResolvedDecoder out;
  if (const auto* fixed = std::get_if<FixedDecoder>(&cfg.decoder)) {
    fixed->config.validate();
    out.config = fixed->config;
    out.policy = "fixed";
    // Calibration is informational here (sigma_hat feeds the bound
    // verdicts); a degenerate memory just leaves it empty.
    try {
      out.calibration = calibrate_decoder(mem, labels, cfg.probe_count, 0.01,
                                          calibration_seed);
    } catch (const InvalidArgument&) {
    }
    return out;
  }
  if (const auto* a = std::get_if<AutoCalibrate>(&cfg.decoder)) {
    out.calibration =
        calibrate_decoder(mem, labels, cfg.probe_count, a->eps, calibration_seed);
    out.config = out.calibration->decoder;
    out.policy = "auto";
    return out;
  }
  out.calibration =
      calibrate_decoder(mem, labels, cfg.probe_count, 0.01, calibration_seed);
  out.config = signal_split_decoder(*out.calibration, cfg.dim,
                                    total_key_flips(cfg.noise),
                                    combined_flip_rate(cfg.noise));
  out.policy = "signal-split";
  return out;
}

FpResult run_fp_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const Store store = make_store(cfg, cfg.items, 0);
  FpResult res;
  res.decoder = resolve_for(cfg, store, cfg.master_seed);
  const auto& dec = res.decoder.config;
  res.trials = cfg.trials;
  res.records.reserve(cfg.trials);
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    const auto trial_seed = derive_seed(cfg.master_seed, "fp-trial", i);
    // Workload keys are "key-<i>", so probe keys never collide with members.
    auto key = "probe-" + std::to_string(i);
    const auto q = run_query(cfg, store, dec, key, "", trial_seed, 0);
    if (q.outcome.hit) ++res.triggers;
    res.records.push_back(make_record(cfg, store, "fp", dec, i, trial_seed,
                                      QueryKind::non_member, std::move(key), "", q));
  }
  res.rate = static_cast<double>(res.triggers) / static_cast<double>(res.trials);

  const double d = static_cast<double>(cfg.dim);
  if (res.decoder.calibration) {
    res.tau_normalized =
        std::max(0.0, dec.tau * std::sqrt(d) / res.decoder.calibration->sigma_hat);
  } else {
    res.tau_normalized = dec.tau > 0.0 ? dec.tau : 0.0;
  }
  res.bound = bounds::fp_bound(static_cast<double>(cfg.label_count), d,
                               res.tau_normalized);
  res.slack = binomial_slack(res.bound, res.trials);
  res.within_bound = res.rate <= res.bound + res.slack;
  return res;
}

FnResult run_fn_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const Store store = make_store(cfg, cfg.items, 0);
  FnResult res;
  res.decoder = resolve_for(cfg, store, cfg.master_seed);
  const auto& dec = res.decoder.config;
  res.trials = cfg.trials;
  res.records.reserve(cfg.trials);
  std::uint64_t argmax_hits = 0;
  Sum true_scores;
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    const auto trial_seed = derive_seed(cfg.master_seed, "fn-trial", i);
    const Record& rec = pick_member(store, trial_seed);
    const auto q = run_query(cfg, store, dec, rec.key, rec.value, trial_seed, 0);
    auto record = make_record(cfg, store, "fn", dec, i, trial_seed, QueryKind::member,
                              rec.key, rec.value, q);
    switch (record.outcome) {
      case Outcome::hit_correct: ++res.correct; break;
      case Outcome::hit_wrong: ++res.wrong; break;
      case Outcome::reject: ++res.rejects; break;
    }
    if (q.argmax_correct) ++argmax_hits;
    true_scores.add(q.true_score.value_or(0.0));
    res.records.push_back(std::move(record));
  }
  const auto t = static_cast<double>(res.trials);
  res.accuracy = static_cast<double>(res.correct) / t;
  res.reject_rate = static_cast<double>(res.rejects) / t;
  res.wrong_rate = static_cast<double>(res.wrong) / t;
  res.argmax_accuracy = static_cast<double>(argmax_hits) / t;

  const double d = static_cast<double>(cfg.dim);
  res.key_flips = total_key_flips(cfg.noise);
  res.flip_rate = combined_flip_rate(cfg.noise);
  res.predicted_signal = predicted_signal(d, res.key_flips, res.flip_rate);
  res.bound = res.predicted_signal > 0.0
                  ? bounds::fn_bound(d, static_cast<double>(res.key_flips),
                                     res.flip_rate, static_cast<double>(cfg.items))
                  : 1.0;
  res.measured_signal = kNaN;
  res.bound_calibrated = 1.0;
  if (const auto& cal = res.decoder.calibration; cal && cal->mu_hat > 0.0) {
    res.measured_signal = true_scores.value() / t * d / cal->mu_hat;
    const double mu = cal->mu_hat * res.predicted_signal / d;
    if (mu > 0.0) {
      res.bound_calibrated = bounds::fn_bound_scaled(
          mu, cal->sigma_hat, static_cast<double>(cfg.label_count), mu / 2.0);
    }
  }
  const double failure = 1.0 - res.accuracy;
  res.within_bound =
      failure <= res.bound_calibrated + binomial_slack(res.bound_calibrated, res.trials);
  return res;
}

CapacityResult run_capacity_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  CapacityResult res;
  for (const std::size_t n : cfg.capacity_grid) {
    const Store store = make_store(cfg, n, 0);
    const auto row_seed = derive_seed(cfg.master_seed, "capacity", n);
    const auto decoder = resolve_for(cfg, store, row_seed);
    CapacityRow row;
    row.items = n;
    row.seed = row_seed;
    row.trials = cfg.trials;
    row.tau = decoder.config.tau;
    row.delta = decoder.config.delta;
    row.sigma_hat = decoder.calibration ? decoder.calibration->sigma_hat : kNaN;
    row.mu_hat = decoder.calibration ? decoder.calibration->mu_hat : kNaN;
    std::uint64_t correct = 0, rejects = 0, wrong = 0;
    for (std::uint64_t i = 0; i < cfg.trials; ++i) {
      const auto trial_seed = derive_seed(row_seed, "capacity-trial", i);
      const Record& rec = pick_member(store, trial_seed);
      const auto q =
          run_query(cfg, store, decoder.config, rec.key, rec.value, trial_seed, 0);
      switch (classify(q.outcome, rec.value)) {
        case Outcome::hit_correct: ++correct; break;
        case Outcome::hit_wrong: ++wrong; break;
        case Outcome::reject: ++rejects; break;
      }
    }
    const auto t = static_cast<double>(cfg.trials);
    row.accuracy = static_cast<double>(correct) / t;
    row.reject_rate = static_cast<double>(rejects) / t;
    row.wrong_rate = static_cast<double>(wrong) / t;
    res.rows.push_back(row);
  }
  return res;
}

AmplifyResult run_amplify_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  AmplifiedConfig amp{cfg.replicas};
  amp.validate();
  std::vector<Store> stores;
  std::vector<DecoderConfig> decoders;
  stores.reserve(amp.replicas);
  for (std::size_t j = 0; j < amp.replicas; ++j) {
    stores.push_back(make_store(cfg, cfg.items, j));
    decoders.push_back(
        resolve_for(cfg, stores.back(), derive_seed(cfg.master_seed, "replica", j)).config);
  }

  AmplifyResult res;
  res.replicas = amp.replicas;
  res.trials = cfg.trials;
  std::vector<DecodeOutcome> outcomes(amp.replicas);
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    const auto trial_seed = derive_seed(cfg.master_seed, "amplify-trial", i);
    // Records are identical across replicas; only the codebooks differ.
    const Record& rec = pick_member(stores[0], trial_seed);
    QueryResult first;
    for (std::size_t j = 0; j < amp.replicas; ++j) {
      auto q = run_query(cfg, stores[j], decoders[j], rec.key, rec.value, trial_seed, j);
      if (j == 0) first = q;
      outcomes[j] = std::move(q.outcome);
    }
    QueryResult voted;
    voted.outcome = vote(outcomes);
    voted.runtime_us = first.runtime_us;
    const bool single_ok = classify(first.outcome, rec.value) == Outcome::hit_correct;
    const bool voted_ok = classify(voted.outcome, rec.value) == Outcome::hit_correct;
    if (!single_ok) ++res.single_errors;
    if (!voted_ok) ++res.voted_errors;
    if (!single_ok && voted_ok) ++res.fixed_by_vote;
    if (single_ok && !voted_ok) ++res.broken_by_vote;
    res.single_records.push_back(make_record(cfg, stores[0], "amplify-single",
                                             decoders[0], i, trial_seed,
                                             QueryKind::member, rec.key, rec.value, first));
    res.voted_records.push_back(make_record(cfg, stores[0], "amplify-voted",
                                            decoders[0], i, trial_seed,
                                            QueryKind::member, rec.key, rec.value, voted));
  }
  const auto t = static_cast<double>(cfg.trials);
  res.single_error_rate = static_cast<double>(res.single_errors) / t;
  res.voted_error_rate = static_cast<double>(res.voted_errors) / t;
  const auto discordant = res.fixed_by_vote + res.broken_by_vote;
  res.sign_test_z =
      discordant == 0
          ? 0.0
          : (static_cast<double>(res.fixed_by_vote) -
             static_cast<double>(res.broken_by_vote)) /
                std::sqrt(static_cast<double>(discordant));
  res.significant = res.sign_test_z > 1.6449;
  return res;
}

BaselineResult run_baseline_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  BaselineResult res;
  res.chase = chase_simulate(cfg.chase, cfg.trials,
                             derive_seed(cfg.master_seed, "chase", 0));
  const auto fn = run_fn_experiment(cfg);
  res.hbf.accuracy = fn.accuracy;
  res.hbf.trials = fn.trials;
  res.hbf.rounds = 1;
  res.hbf.seed = cfg.master_seed;
  res.rows = compare_report(res.hbf, cfg.chase, res.chase);
  return res;
}

CsvTable trial_table(const ExperimentConfig& cfg,
                     const std::vector<TrialRecord>& records) {
  std::vector<std::string> header = {
      "experiment", "trial",     "trial_seed", "query_kind", "query_key",
      "expected_label", "d",     "n",          "labels",     "rho",
      "key_seed",   "value_seed", "master_seed", "noise",    "tau",
      "delta",      "outcome",   "decoded_label", "s1",      "s2",
      "true_score"};
  if (cfg.record_timing) header.push_back("runtime_us");
  CsvTable table(std::move(header));
  for (const auto& r : records) {
    std::vector<std::string> row = {
        r.experiment,
        std::to_string(r.trial),
        std::to_string(r.trial_seed),
        std::string(to_string(r.kind)),
        r.query_key,
        r.expected_label,
        std::to_string(cfg.dim),
        std::to_string(r.items),
        std::to_string(cfg.label_count),
        format_number(cfg.gain),
        std::to_string(r.key_seed),
        std::to_string(r.value_seed),
        std::to_string(cfg.master_seed),
        r.noise,
        format_number(r.tau),
        format_number(r.delta),
        std::string(to_string(r.outcome)),
        r.decoded_label,
        format_number(r.s1),
        format_number(r.s2),
        r.true_score ? format_number(*r.true_score) : ""};
    if (cfg.record_timing) row.push_back(format_number(r.runtime_us));
    table.add_row(std::move(row));
  }
  return table;
}

CsvTable capacity_table(const ExperimentConfig& cfg, const CapacityResult& result) {
  CsvTable table({"d", "n", "labels", "rho", "noise", "sigma_hat", "mu_hat", "tau",
                  "delta", "accuracy", "reject_rate", "wrong_rate", "trials",
                  "seed"});
  for (const auto& r : result.rows) {
    table.add_row({std::to_string(cfg.dim), std::to_string(r.items),
                   std::to_string(cfg.label_count), format_number(cfg.gain),
                   noise_label(cfg.noise), format_number(r.sigma_hat),
                   format_number(r.mu_hat), format_number(r.tau),
                   format_number(r.delta), format_number(r.accuracy),
                   format_number(r.reject_rate), format_number(r.wrong_rate),
                   std::to_string(r.trials), std::to_string(r.seed)});
  }
  return table;
}

CsvTable comparison_table(const std::vector<ComparisonRow>& rows) {
  CsvTable table({"system", "p", "ell", "T", "success_prob", "expected_time",
                  "expected_time_repeat", "measured_success", "measured_time_mean",
                  "trials", "seed"});
  for (const auto& r : rows) {
    table.add_row({r.system, format_number(r.p), std::to_string(r.ell),
                   format_number(r.hop_time), format_number(r.success_prob),
                   format_number(r.expected_time),
                   format_number(r.expected_time_repeat),
                   format_number(r.measured_success),
                   format_number(r.measured_time_mean), std::to_string(r.trials),
                   std::to_string(r.seed)});
  }
  return table;
}

namespace {

void add_decoder_lines(SummaryLines& out, const ResolvedDecoder& dec) {
  out.emplace_back("decoder", dec.policy);
  out.emplace_back("tau", format_number(dec.config.tau));
  out.emplace_back("delta", format_number(dec.config.delta));
  if (dec.calibration) {
    out.emplace_back("sigma_hat", format_number(dec.calibration->sigma_hat));
    out.emplace_back("mu_hat", format_number(dec.calibration->mu_hat));
    out.emplace_back("evt_tau", format_number(dec.calibration->evt_tau));
  }
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  const std::string name(to_string(cfg.kind));
  switch (cfg.kind) {
    case ExperimentKind::fp: {
      const auto r = run_fp_experiment(cfg);
      ExperimentReport rep{name, trial_table(cfg, r.records), {}};
      add_decoder_lines(rep.summary, r.decoder);
      rep.summary.emplace_back("trials", std::to_string(r.trials));
      rep.summary.emplace_back("triggers", std::to_string(r.triggers));
      rep.summary.emplace_back("fp_rate", format_number(r.rate));
      rep.summary.emplace_back("tau_normalized", format_number(r.tau_normalized));
      rep.summary.emplace_back("fp_bound", format_number(r.bound));
      rep.summary.emplace_back("slack", format_number(r.slack));
      rep.summary.emplace_back("within_bound", yes_no(r.within_bound));
      return rep;
    }
    case ExperimentKind::fn: {
      const auto r = run_fn_experiment(cfg);
      ExperimentReport rep{name, trial_table(cfg, r.records), {}};
      add_decoder_lines(rep.summary, r.decoder);
      rep.summary.emplace_back("trials", std::to_string(r.trials));
      rep.summary.emplace_back("accuracy", format_number(r.accuracy));
      rep.summary.emplace_back("reject_rate", format_number(r.reject_rate));
      rep.summary.emplace_back("wrong_rate", format_number(r.wrong_rate));
      rep.summary.emplace_back("argmax_accuracy", format_number(r.argmax_accuracy));
      rep.summary.emplace_back("key_flips", std::to_string(r.key_flips));
      rep.summary.emplace_back("flip_rate", format_number(r.flip_rate));
      rep.summary.emplace_back("predicted_signal", format_number(r.predicted_signal));
      rep.summary.emplace_back("measured_signal", format_number(r.measured_signal));
      rep.summary.emplace_back("fn_bound", format_number(r.bound));
      rep.summary.emplace_back("fn_bound_calibrated", format_number(r.bound_calibrated));
      rep.summary.emplace_back("within_bound", yes_no(r.within_bound));
      return rep;
    }
    case ExperimentKind::capacity: {
      const auto r = run_capacity_sweep(cfg);
      ExperimentReport rep{name, capacity_table(cfg, r), {}};
      bool increasing = true;
      for (std::size_t i = 1; i < r.rows.size(); ++i) {
        increasing = increasing && r.rows[i].sigma_hat > r.rows[i - 1].sigma_hat;
      }
      rep.summary.emplace_back("rows", std::to_string(r.rows.size()));
      rep.summary.emplace_back("sigma_hat_increasing", yes_no(increasing));
      return rep;
    }
    case ExperimentKind::amplify: {
      const auto r = run_amplify_experiment(cfg);
      auto records = r.single_records;
      records.insert(records.end(), r.voted_records.begin(), r.voted_records.end());
      ExperimentReport rep{name, trial_table(cfg, records), {}};
      rep.summary.emplace_back("replicas", std::to_string(r.replicas));
      rep.summary.emplace_back("trials", std::to_string(r.trials));
      rep.summary.emplace_back("single_error_rate", format_number(r.single_error_rate));
      rep.summary.emplace_back("voted_error_rate", format_number(r.voted_error_rate));
      rep.summary.emplace_back("fixed_by_vote", std::to_string(r.fixed_by_vote));
      rep.summary.emplace_back("broken_by_vote", std::to_string(r.broken_by_vote));
      rep.summary.emplace_back("sign_test_z", format_number(r.sign_test_z));
      rep.summary.emplace_back("significant", yes_no(r.significant));
      return rep;
    }
    case ExperimentKind::baseline: {
      const auto r = run_baseline_experiment(cfg);
      ExperimentReport rep{name, comparison_table(r.rows), {}};
      rep.summary.emplace_back("chase_success_rate", format_number(r.chase.success_rate));
      rep.summary.emplace_back("chase_mean_total_time",
                               format_number(r.chase.mean_total_time));
      rep.summary.emplace_back("chase_total_time_stderr",
                               format_number(r.chase.total_time_stderr));
      rep.summary.emplace_back("hbf_accuracy", format_number(r.hbf.accuracy));
      rep.summary.emplace_back("hbf_rounds", std::to_string(r.hbf.rounds));
      return rep;
    }
  }
  throw InvalidArgument("run_experiment: unknown experiment kind");
}

}  // namespace hbf
