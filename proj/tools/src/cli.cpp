#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "hbf/bounds.hpp"
#include "hbf/calibrate.hpp"
#include "hbf/config.hpp"
#include "hbf/errors.hpp"
#include "hbf/experiment.hpp"
#include "hbf/index.hpp"
#include "hbf/persistence.hpp"
#include "hbf/records.hpp"
#include "hbf/rng.hpp"

namespace hbf::cli {
namespace {

namespace fs = std::filesystem;

std::string sidecar(const std::string& index) { return index + ".labels"; }

std::string num(double v) { return fmt::format("{:.6g}", v); }

void print_pairs(std::ostream& out, const SummaryLines& lines) {
  for (const auto& [k, v] : lines) fmt::print(out, "{}={}\n", k, v);
}

void print_csv_pairs(std::ostream& out, const SummaryLines& lines) {
  CsvTable table([&] {
    std::vector<std::string> h;
    for (const auto& [k, _] : lines) h.push_back(k);
    return h;
  }());
  std::vector<std::string> row;
  for (const auto& [_, v] : lines) row.push_back(v);
  table.add_row(std::move(row));
  out << table.to_string();
}

// Labels of an index: the sidecar when present, or an explicit file.
std::vector<std::string> load_labels(const std::string& index,
                                     const std::string& explicit_path) {
  if (!explicit_path.empty()) return read_labels(explicit_path);
  if (fs::exists(sidecar(index))) return read_labels(sidecar(index));
  return {};
}

std::vector<std::string> merged_labels(std::vector<std::string> labels,
                                       const std::vector<Record>& records) {
  std::set<std::string> all(labels.begin(), labels.end());
  for (const auto& r : records) all.insert(r.value);
  return {all.begin(), all.end()};
}

struct Common {
  std::uint64_t seed = 1;
  double eps = 0.01;
  std::size_t probes = 200;
};

// ---- build / insert ---------------------------------------------------------

struct BuildArgs {
  std::string input;
  std::string out;
  std::size_t dim = 4096;
  double rho = 1.0;
  bool normalize = false;
};

int do_build(const BuildArgs& a, const Common& c, std::ostream& out) {
  const auto records = read_records(a.input);
  const double gain =
      a.normalize && !records.empty() ? a.rho * normalized_gain(records.size()) : a.rho;
  const auto mem = build(records, a.dim, gain, derive_seed(c.seed, "key-codebook", 0),
                         derive_seed(c.seed, "value-codebook", 0));
  save_memory(mem, a.out);
  const auto labels = merged_labels({}, records);
  write_labels(sidecar(a.out), labels);
  fmt::print(out, "items={}\ndim={}\nrho={}\nlabels={}\nindex={}\n", mem.item_count(),
             mem.dim(), num(mem.gain()), labels.size(), a.out);
  return kOk;
}

struct InsertArgs {
  std::string index;
  std::string key;
  std::string value;
  std::string out;
};

int do_insert(const InsertArgs& a, std::ostream& out) {
  const auto mem = insert(load_memory(a.index), a.key, a.value);
  const auto target = a.out.empty() ? a.index : a.out;
  const auto labels =
      merged_labels(load_labels(a.index, ""), {Record{a.key, a.value}});
  save_memory(mem, target);
  write_labels(sidecar(target), labels);
  fmt::print(out, "items={}\nindex={}\n", mem.item_count(), target);
  return kOk;
}

// ---- query / calibrate ------------------------------------------------------

struct QueryArgs {
  std::string index;
  std::string key;
  std::string labels;
  std::optional<double> tau;
  double delta = 0.0;
  std::size_t top_k = 2;
};

int do_query(const QueryArgs& a, const Common& c, std::ostream& out) {
  const auto mem = load_memory(a.index);
  const auto labels = load_labels(a.index, a.labels);
  if (mem.item_count() == 0 || labels.empty()) {
    out << "BOTTOM\n";
    return kOk;
  }
  if (labels.size() < 2) {
    throw InvalidArgument("query needs at least two candidate labels");
  }
  const LabelSet set(labels, mem.value_seed(), mem.dim());
  DecoderConfig dec;
  if (a.tau) {
    dec = {*a.tau, a.delta, a.top_k};
  } else {
    dec = calibrate_decoder(mem, set, c.probes, c.eps,
                            derive_seed(c.seed, "calibration", 0))
              .decoder;
    dec.top_k = a.top_k;
  }
  dec.top_k = std::min(dec.top_k, set.size());
  dec.validate();
  const auto outcome = decode(mem, a.key, dec, set);
  if (outcome.hit) {
    fmt::print(out, "HIT {}\n", outcome.label);
  } else {
    out << "BOTTOM\n";
  }
  fmt::print(out, "s1={}\ns2={}\ntau={}\ndelta={}\n", num(outcome.best_score),
             num(outcome.runner_up), num(dec.tau), num(dec.delta));
  for (std::size_t i = 0; i < outcome.top_k.size(); ++i) {
    fmt::print(out, "top{}={} {}\n", i + 1, outcome.top_k[i].label,
               num(outcome.top_k[i].score));
  }
  return kOk;
}

int do_calibrate(const std::string& index, const std::string& labels_path,
                 const Common& c, std::ostream& out) {
  const auto mem = load_memory(index);
  const auto labels = load_labels(index, labels_path);
  if (labels.size() < 2) {
    throw InvalidArgument("calibration needs at least two candidate labels");
  }
  const LabelSet set(labels, mem.value_seed(), mem.dim());
  const auto cal = calibrate_decoder(mem, set, c.probes, c.eps,
                                     derive_seed(c.seed, "calibration", 0));
  fmt::print(out, "tau={}\ndelta={}\ntop_k={}\nsigma_hat={}\nmu_hat={}\nevt_tau={}\n",
             num(cal.decoder.tau), num(cal.decoder.delta), cal.decoder.top_k,
             num(cal.sigma_hat), num(cal.mu_hat), num(cal.evt_tau));
  fmt::print(out, "eps={}\nprobes={}\n", num(cal.eps), cal.probe_count);
  return kOk;
}

// ---- experiments ------------------------------------------------------------

struct ExperimentArgs {
  std::string config;
  std::string out;
  std::vector<std::string> noise;
  std::string decoder;
  std::vector<std::size_t> grid;
  std::size_t dim = 0, n = 0, labels = 0, probes = 0, r = 0, top_k = 2;
  double rho = 0, eps = 0, tau = 0, delta = 0, p = 0, T = 0;
  std::uint64_t trials = 0, seed = 0, ell = 0;
  bool timing = false;
};

void add_experiment_options(CLI::App* sub, ExperimentArgs& a) {
  sub->add_option("--config", a.config, "TOML-style experiment file")->check(CLI::ExistingFile);
  sub->add_option("--out", a.out, "write per-trial CSV here");
  sub->add_option("--noise", a.noise, "noise channel, repeatable (e.g. key-hamming:205)");
  sub->add_option("--decoder", a.decoder, "auto | signal-split | fixed")
      ->check(CLI::IsMember({"auto", "signal-split", "fixed"}));
  sub->add_option("--dim", a.dim, "dimension d");
  sub->add_option("--n", a.n, "stored items");
  sub->add_option("--labels", a.labels, "label universe size |Y|");
  sub->add_option("--rho", a.rho, "gain");
  sub->add_option("--trials", a.trials, "queries per experiment");
  sub->add_option("--seed", a.seed, "master seed");
  sub->add_option("--eps", a.eps, "calibration target error");
  sub->add_option("--probes", a.probes, "calibration probes");
  sub->add_option("--tau", a.tau, "fixed decoder threshold");
  sub->add_option("--delta", a.delta, "fixed decoder margin");
  sub->add_option("--k", a.top_k, "fixed decoder top-K");
  sub->add_option("--grid", a.grid, "capacity sweep n values")->delimiter(',');
  sub->add_option("--p", a.p, "baseline per-hop success");
  sub->add_option("--ell", a.ell, "baseline hop count");
  sub->add_option("--T", a.T, "baseline per-hop time");
  sub->add_option("--r", a.r, "amplification replicas");
  sub->add_flag("--timing", a.timing, "add a runtime_us column (not deterministic)");
}

ExperimentConfig experiment_config(CLI::App* sub, const ExperimentArgs& a,
                                   ExperimentKind kind) {
  ExperimentConfig cfg;
  if (!a.config.empty()) cfg = load_config(a.config, cfg);
  cfg.kind = kind;
  auto given = [&](const char* name) { return sub->count(name) > 0; };
  if (given("--dim")) cfg.dim = a.dim;
  if (given("--n")) cfg.items = a.n;
  if (given("--labels")) cfg.label_count = a.labels;
  if (given("--rho")) cfg.gain = a.rho;
  if (given("--trials")) cfg.trials = a.trials;
  if (given("--seed")) cfg.master_seed = a.seed;
  if (given("--probes")) cfg.probe_count = a.probes;
  if (given("--out")) cfg.output = a.out;
  if (given("--timing")) cfg.record_timing = a.timing;
  if (given("--grid")) cfg.capacity_grid = a.grid;
  if (given("--p")) cfg.chase.p = a.p;
  if (given("--ell")) cfg.chase.hops = a.ell;
  if (given("--T")) cfg.chase.hop_time = a.T;
  if (given("--r")) cfg.replicas = a.r;
  if (given("--noise")) {
    cfg.noise.clear();
    for (const auto& n : a.noise) cfg.noise.push_back(parse_noise(n));
  }
  if (given("--decoder") || given("--eps") || given("--tau")) {
    const std::string mode = given("--decoder") ? a.decoder
                             : given("--tau")   ? "fixed"
                                                : "auto";
    if (mode == "auto") {
      AutoCalibrate ac;
      if (const auto* prev = std::get_if<AutoCalibrate>(&cfg.decoder)) ac = *prev;
      if (given("--eps")) ac.eps = a.eps;
      cfg.decoder = ac;
    } else if (mode == "signal-split") {
      cfg.decoder = SignalSplit{};
    } else {
      if (!given("--tau")) throw InvalidArgument("--decoder fixed needs --tau");
      cfg.decoder = FixedDecoder{DecoderConfig{a.tau, a.delta, a.top_k}};
    }
  }
  if (cfg.kind == ExperimentKind::capacity && cfg.capacity_grid.empty()) {
    cfg.capacity_grid = {cfg.items};
  }
  cfg.validate();
  return cfg;
}

int do_experiment(const ExperimentConfig& cfg, std::ostream& out) {
  const auto report = run_experiment(cfg);
  fmt::print(out, "experiment={}\nseed={}\n", report.name, cfg.master_seed);
  print_pairs(out, report.summary);
  if (!cfg.output.empty()) {
    write_text_file(cfg.output, report.table.to_string());
    fmt::print(out, "csv={}\n", cfg.output);
  }
  return kOk;
}

// ---- bounds -----------------------------------------------------------------

struct BoundsArgs {
  double n = 0, d = 0, eps = 0, tau = 0, hamming = 0, pe = 0, t = 0, rho = 0,
         c = 1, m = 0, sigma = 1, p = 0;
  bool csv = false;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holographic Bloom filter index and experiment harness", "hbf"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  auto add_common = [&](CLI::App* sub, bool eps, bool probes) {
    sub->add_option("--seed", common.seed, "master seed");
    if (eps) sub->add_option("--eps", common.eps, "calibration target error");
    if (probes) sub->add_option("--probes", common.probes, "calibration probes");
  };

  BuildArgs build_args;
  auto* build_cmd = app.add_subcommand("build", "build an index from key<TAB>value records");
  build_cmd->add_option("--input", build_args.input, "records TSV")->required();
  build_cmd->add_option("--out", build_args.out, "index file")->required();
  build_cmd->add_option("--dim", build_args.dim, "dimension d");
  build_cmd->add_option("--rho", build_args.rho, "gain");
  build_cmd->add_flag("--normalize", build_args.normalize, "scale the gain by 1/sqrt(n)");
  add_common(build_cmd, false, false);

  InsertArgs insert_args;
  auto* insert_cmd = app.add_subcommand("insert", "add one record to an index");
  insert_cmd->add_option("--index", insert_args.index, "index file")->required();
  insert_cmd->add_option("--key", insert_args.key, "key")->required();
  insert_cmd->add_option("--value", insert_args.value, "value label")->required();
  insert_cmd->add_option("--out", insert_args.out, "write here instead of in place");

  QueryArgs query_args;
  auto* query_cmd = app.add_subcommand("query", "decode one key");
  query_cmd->add_option("--index", query_args.index, "index file")->required();
  query_cmd->add_option("--key", query_args.key, "key")->required();
  query_cmd->add_option("--labels", query_args.labels, "candidate labels, one per line");
  query_cmd->add_option("--tau", query_args.tau, "fixed threshold (skips calibration)");
  query_cmd->add_option("--delta", query_args.delta, "fixed margin");
  query_cmd->add_option("--k", query_args.top_k, "top-K list size");
  add_common(query_cmd, true, true);

  std::string cal_index, cal_labels;
  auto* cal_cmd = app.add_subcommand("calibrate", "fit tau and delta for an index");
  cal_cmd->add_option("--index", cal_index, "index file")->required();
  cal_cmd->add_option("--labels", cal_labels, "candidate labels, one per line");
  add_common(cal_cmd, true, true);

  auto* exp_cmd = app.add_subcommand("experiment", "run a Monte Carlo experiment");
  exp_cmd->require_subcommand(1);
  std::vector<std::pair<CLI::App*, ExperimentKind>> exp_subs;
  std::vector<std::unique_ptr<ExperimentArgs>> exp_args;
  for (auto kind : {ExperimentKind::fp, ExperimentKind::fn, ExperimentKind::capacity,
                    ExperimentKind::baseline, ExperimentKind::amplify}) {
    auto* sub = exp_cmd->add_subcommand(std::string(to_string(kind)));
    exp_args.push_back(std::make_unique<ExperimentArgs>());
    add_experiment_options(sub, *exp_args.back());
    exp_subs.emplace_back(sub, kind);
  }
  auto* amp_cmd = app.add_subcommand("amplify", "same as `experiment amplify`");
  exp_args.push_back(std::make_unique<ExperimentArgs>());
  add_experiment_options(amp_cmd, *exp_args.back());
  exp_subs.emplace_back(amp_cmd, ExperimentKind::amplify);

  BoundsArgs b;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate analytic bounds");
  bounds_cmd->require_subcommand(1);
  bounds_cmd->add_flag("--csv", b.csv, "print a CSV row instead of name=value lines");
  auto* b_fp = bounds_cmd->add_subcommand("fp", "false-positive bound / threshold");
  b_fp->add_option("--n", b.n, "candidates")->required();
  b_fp->add_option("--d", b.d, "dimension")->required();
  b_fp->add_option("--eps", b.eps, "target probability");
  b_fp->add_option("--tau", b.tau, "threshold");
  auto* b_fn = bounds_cmd->add_subcommand("fn", "false-negative bound");
  b_fn->add_option("--d", b.d, "dimension")->required();
  b_fn->add_option("--H", b.hamming, "key Hamming distance");
  b_fn->add_option("--pe", b.pe, "memory flip rate");
  b_fn->add_option("--n", b.n, "candidates")->required();
  b_fn->add_option("--t", b.t, "split point (default mu/2)");
  auto* b_margin = bounds_cmd->add_subcommand("margin", "margin decoder failure bound");
  b_margin->add_option("--rho", b.rho, "gain")->required();
  b_margin->add_option("--d", b.d, "dimension")->required();
  b_margin->add_option("--c", b.c, "variance proxy constant");
  b_margin->add_option("--m", b.m, "label count")->required();
  auto* b_evt = bounds_cmd->add_subcommand("evt", "Gaussian-maximum threshold");
  b_evt->add_option("--sigma", b.sigma, "noise scale");
  b_evt->add_option("--m", b.m, "candidates")->required();
  b_evt->add_option("--eps", b.eps, "target probability")->required();
  auto* b_signal = bounds_cmd->add_subcommand("signal", "expected match score");
  b_signal->add_option("--d", b.d, "dimension")->required();
  b_signal->add_option("--H", b.hamming, "key Hamming distance");
  b_signal->add_option("--pe", b.pe, "memory flip rate");
  auto* b_inv = bounds_cmd->add_subcommand("invnorm", "standard normal quantile");
  b_inv->add_option("--p", b.p, "probability")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n\n{}", e.what(), app.help());
    return kUsage;
  }

  try {
    if (*build_cmd) return do_build(build_args, common, out);
    if (*insert_cmd) return do_insert(insert_args, out);
    if (*query_cmd) return do_query(query_args, common, out);
    if (*cal_cmd) return do_calibrate(cal_index, cal_labels, common, out);
    for (std::size_t i = 0; i < exp_subs.size(); ++i) {
      auto [sub, kind] = exp_subs[i];
      if (*sub) return do_experiment(experiment_config(sub, *exp_args[i], kind), out);
    }
    if (*bounds_cmd) {
      SummaryLines lines;
      if (*b_fp) {
        if (b_fp->count("--tau")) {
          lines.emplace_back("fp_bound", num(bounds::fp_bound(b.n, b.d, b.tau)));
        } else {
          if (!b_fp->count("--eps")) throw InvalidArgument("bounds fp needs --eps or --tau");
          lines.emplace_back("tau", num(bounds::fp_threshold(b.n, b.d, b.eps)));
        }
      } else if (*b_fn) {
        const double mu = bounds::signal_mean(b.d, b.hamming, b.pe);
        const double t = b_fn->count("--t") ? b.t : mu / 2.0;
        lines.emplace_back("mu", num(mu));
        lines.emplace_back("t", num(t));
        lines.emplace_back("fn_bound", num(bounds::fn_bound(b.d, b.hamming, b.pe, b.n, t)));
      } else if (*b_margin) {
        const auto r = bounds::margin_failure_bound(b.rho, b.d, b.c, b.m);
        lines.emplace_back("margin_bound", num(r.probability));
        lines.emplace_back("tau", num(r.tau));
        lines.emplace_back("delta", num(r.delta));
      } else if (*b_evt) {
        lines.emplace_back("t_exact", num(bounds::evt_threshold_exact(b.sigma, b.m, b.eps)));
        lines.emplace_back("t_first",
                           num(bounds::evt_threshold_approx(b.sigma, b.m, bounds::EvtOrder::first)));
        if (b.m >= 3) {
          lines.emplace_back("t_gumbel", num(bounds::evt_threshold_approx(
                                             b.sigma, b.m, bounds::EvtOrder::gumbel)));
        }
      } else if (*b_signal) {
        lines.emplace_back("mu", num(bounds::signal_mean(b.d, b.hamming, b.pe)));
      } else if (*b_inv) {
        lines.emplace_back("x", num(bounds::inv_norm_cdf(b.p)));
      }
      if (b.csv) {
        print_csv_pairs(out, lines);
      } else {
        print_pairs(out, lines);
      }
      return kOk;
    }
  } catch (const IoError& e) {
    fmt::print(err, "io error: {}\n", e.what());
    return kIo;
  } catch (const FormatError& e) {
    fmt::print(err, "format error: {}\n", e.what());
    return kData;
  } catch (const InvalidArgument& e) {
    fmt::print(err, "invalid argument: {}\n", e.what());
    return kUsage;
  }
  fmt::print(err, "{}", app.help());
  return kUsage;
}

}  // namespace hbf::cli
