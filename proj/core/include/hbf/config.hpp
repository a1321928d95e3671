#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hbf/baseline.hpp"
#include "hbf/index.hpp"
#include "hbf/noise.hpp"

namespace hbf {

enum class ExperimentKind { fp, fn, capacity, baseline, amplify };

std::string_view to_string(ExperimentKind kind) noexcept;
ExperimentKind parse_experiment_kind(std::string_view text);

// How an experiment obtains its decoder.
struct AutoCalibrate {
  double eps = 0.01;
};
struct SignalSplit {};
struct FixedDecoder {
  DecoderConfig config;
};
using DecoderPolicy = std::variant<AutoCalibrate, SignalSplit, FixedDecoder>;

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::fp;
  std::size_t dim = 4096;
  std::size_t items = 100;        // n
  std::size_t label_count = 100;  // |Y|
  double gain = 1.0;
  std::vector<NoiseChannel> noise;
  DecoderPolicy decoder = AutoCalibrate{};
  std::size_t probe_count = 200;
  std::uint64_t trials = 1000;
  std::uint64_t master_seed = 1;
  std::string output;
  std::vector<std::size_t> capacity_grid;
  ChaseModel chase{0.9, 10, 1.0};
  std::size_t replicas = 3;
  bool record_timing = false;

  /// Throws InvalidArgument describing the first bad field.
  void validate() const;
};

/// Flat view of a TOML-style file: "section.key" -> raw value. Strings lose
/// their quotes; arrays keep their elements in order.
struct ConfigDocument {
  std::map<std::string, std::string> scalars;
  std::map<std::string, std::vector<std::string>> arrays;
};

/// Subset of TOML: [section] headers, key = value, "strings", numbers,
/// booleans, single-line arrays and # comments. Throws FormatError with the
/// line number on anything else.
ConfigDocument parse_config_document(std::string_view text);

/// Applies a document on top of `base`. Recognized keys:
///   [experiment] kind dim n labels rho trials seed probes out noise timing
///   [decoder]    mode (auto | signal-split | fixed) eps tau delta top_k
///   [capacity]   grid
///   [baseline]   p ell T
///   [amplify]    r
ExperimentConfig apply_config(const ConfigDocument& doc, ExperimentConfig base);
ExperimentConfig load_config(const std::filesystem::path& path,
                             ExperimentConfig base = {});

}  // namespace hbf
