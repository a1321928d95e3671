#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbf/codebook.hpp"
#include "hbf/hypervector.hpp"

namespace hbf {

struct Record {
  std::string key;
  std::string value;

  friend bool operator==(const Record&, const Record&) = default;
};

/// The superposed index M = sum_i gain * (k_{x_i} * v_{y_i}) together with
/// the parameters needed to regenerate its codebooks.
class HbfMemory {
 public:
  /// Throws InvalidArgument unless gain is finite and > 0.
  HbfMemory(HyperVector vector, double gain, std::uint64_t item_count,
            std::uint64_t key_seed, std::uint64_t value_seed);

  /// Zero memory of the given dimension holding no items.
  static HbfMemory empty(std::size_t dim, double gain, std::uint64_t key_seed,
                         std::uint64_t value_seed);

  const HyperVector& vector() const noexcept { return vector_; }
  std::size_t dim() const noexcept { return vector_.dim(); }
  double gain() const noexcept { return gain_; }
  std::uint64_t item_count() const noexcept { return item_count_; }
  std::uint64_t key_seed() const noexcept { return key_seed_; }
  std::uint64_t value_seed() const noexcept { return value_seed_; }

  Codebook key_codebook() const;
  Codebook value_codebook() const;

  /// Same metadata, different coordinates (used by the noise channels).
  HbfMemory with_vector(HyperVector vector) const;

  friend bool operator==(const HbfMemory&, const HbfMemory&) = default;

 private:
  HyperVector vector_;
  double gain_;
  std::uint64_t item_count_;
  std::uint64_t key_seed_;
  std::uint64_t value_seed_;
};

/// Absolute threshold tau, margin delta and top-K list size. tau may be
/// +-infinity (always/never reject); it may not be NaN.
struct DecoderConfig {
  double tau = 0.0;
  double delta = 0.0;
  std::size_t top_k = 2;

  void validate() const;
};

struct LabelScore {
  std::string label;
  double score = 0.0;

  friend bool operator==(const LabelScore&, const LabelScore&) = default;
};

/// Hit carries the winning label; Reject is the "absent" answer. Scores are
/// filled in either way so rejected queries can still be diagnosed.
struct DecodeOutcome {
  bool hit = false;
  std::string label;
  double best_score = 0.0;
  double runner_up = 0.0;
  std::vector<LabelScore> top_k;

  static DecodeOutcome reject() { return {}; }

  friend bool operator==(const DecodeOutcome&, const DecodeOutcome&) = default;
};

/// A label universe with its value vectors materialized once, so repeated
/// queries do not regenerate the codebook.
class LabelSet {
 public:
  /// Throws InvalidArgument for an empty list, empty labels or duplicates.
  LabelSet(std::vector<std::string> labels, std::uint64_t value_seed,
           std::size_t dim);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t value_seed() const noexcept { return value_seed_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::span<const double> vector(std::size_t i) const noexcept {
    return {signs_.data() + i * dim_, dim_};
  }
  /// Index of a label, or size() if absent.
  std::size_t find(std::string_view label) const;

  /// Unsorted scores <z, v_w> in label order.
  std::vector<double> raw_scores(const HyperVector& z) const;

 private:
  std::vector<std::string> labels_;
  std::uint64_t value_seed_;
  std::size_t dim_;
  std::vector<double> signs_;
};

/// Gain that keeps per-coordinate energy fixed for a batch of n records.
double normalized_gain(std::size_t n);

/// Batch encoder. Contributions are summed in ascending key-byte order so the
/// result does not depend on the order of `records`. Throws InvalidArgument
/// for dim < 2, gain <= 0, empty key/value bytes or duplicate keys.
HbfMemory build(std::span<const Record> records, std::size_t dim, double gain,
                std::uint64_t key_seed, std::uint64_t value_seed);

/// mem + gain * (k_x * v_y), item_count + 1.
HbfMemory insert(const HbfMemory& mem, std::string_view key,
                 std::string_view value);

/// z = k (*) M: correlating with the key on the left aligns z with v_y.
HyperVector correlate_query(const HbfMemory& mem, std::string_view key);
HyperVector correlate_query(const HbfMemory& mem, const HyperVector& key_vector);

/// One score per label, sorted by score descending, ties by label bytes.
std::vector<LabelScore> score_codebook(const HyperVector& z,
                                       const LabelSet& labels);
std::vector<LabelScore> score_codebook(const HyperVector& z,
                                       std::vector<std::string> labels,
                                       std::uint64_t value_seed);

/// Top-K margin decoder: Hit iff s1 >= tau and s1 - s2 >= delta.
/// Requires labels.size() >= cfg.top_k.
DecodeOutcome decode(const HbfMemory& mem, std::string_view key,
                     const DecoderConfig& cfg, const LabelSet& labels);
DecodeOutcome decode(const HbfMemory& mem, std::string_view key,
                     const DecoderConfig& cfg,
                     std::vector<std::string> labels);
/// Decode a query whose key vector has already been formed (e.g. perturbed).
DecodeOutcome decode_vector(const HbfMemory& mem, const HyperVector& key_vector,
                            const DecoderConfig& cfg, const LabelSet& labels);
/// Apply the margin rule to an already computed score list.
DecodeOutcome decide(std::span<const LabelScore> sorted_scores,
                     const DecoderConfig& cfg);

/// Rescale to a new gain. Scores scale by new_gain / gain; the ranking does
/// not change. Throws InvalidArgument for new_gain <= 0 or an empty memory.
HbfMemory renormalize(const HbfMemory& mem, double new_gain);

}  // namespace hbf
