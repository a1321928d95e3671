#include "hbf/index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hbf/errors.hpp"

namespace hbf {
namespace {

// Score descending, then label bytes ascending.
bool ranks_before(double sa, std::string_view la, double sb, std::string_view lb) {
  if (sa != sb) return sa > sb;
  return la < lb;
}

void require_bytes(std::string_view bytes, const char* what) {
  if (bytes.empty()) {
    throw InvalidArgument(std::string(what) + ": empty byte string");
  }
}

}  // namespace

HbfMemory::HbfMemory(HyperVector vector, double gain, std::uint64_t item_count,
                     std::uint64_t key_seed, std::uint64_t value_seed)
    : vector_(std::move(vector)),
      gain_(gain),
      item_count_(item_count),
      key_seed_(key_seed),
      value_seed_(value_seed) {
  if (!(gain > 0.0) || !std::isfinite(gain)) {
    throw InvalidArgument("HbfMemory: gain must be finite and positive");
  }
}

HbfMemory HbfMemory::empty(std::size_t dim, double gain, std::uint64_t key_seed,
                           std::uint64_t value_seed) {
  return HbfMemory(HyperVector(dim), gain, 0, key_seed, value_seed);
}

Codebook HbfMemory::key_codebook() const {
  return Codebook(std::string(kKeyNamespace), key_seed_, dim());
}

Codebook HbfMemory::value_codebook() const {
  return Codebook(std::string(kValueNamespace), value_seed_, dim());
}

HbfMemory HbfMemory::with_vector(HyperVector vector) const {
  if (vector.dim() != dim()) {
    throw InvalidArgument("HbfMemory::with_vector: dimension mismatch");
  }
  return HbfMemory(std::move(vector), gain_, item_count_, key_seed_, value_seed_);
}

void DecoderConfig::validate() const {
  if (std::isnan(tau)) throw InvalidArgument("DecoderConfig: tau is NaN");
  if (!(delta >= 0.0)) {
    throw InvalidArgument("DecoderConfig: delta must be non-negative");
  }
  if (top_k < 2) {
    throw InvalidArgument("DecoderConfig: top_k must be at least 2");
  }
}

LabelSet::LabelSet(std::vector<std::string> labels, std::uint64_t value_seed,
                   std::size_t dim)
    : labels_(std::move(labels)), value_seed_(value_seed), dim_(dim) {
  if (labels_.empty()) throw InvalidArgument("LabelSet: no labels");
  std::vector<std::string_view> sorted(labels_.begin(), labels_.end());
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      dup != sorted.end()) {
    throw InvalidArgument("LabelSet: duplicate label '" + std::string(*dup) + "'");
  }
  const Codebook codebook(std::string(kValueNamespace), value_seed, dim);
  signs_.reserve(labels_.size() * dim);
  for (const auto& label : labels_) {
    require_bytes(label, "LabelSet");
    const auto v = codebook.vector(label);
    signs_.insert(signs_.end(), v.values().begin(), v.values().end());
  }
}

std::size_t LabelSet::find(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<double> LabelSet::raw_scores(const HyperVector& z) const {
  if (z.dim() != dim_) {
    throw InvalidArgument("LabelSet::raw_scores: dimension mismatch");
  }
  std::vector<double> scores(labels_.size());
  const double* zv = z.values().data();
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const double* v = signs_.data() + i * dim_;
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t j = 0;
    for (; j + 4 <= dim_; j += 4) {
      s0 += zv[j] * v[j];
      s1 += zv[j + 1] * v[j + 1];
      s2 += zv[j + 2] * v[j + 2];
      s3 += zv[j + 3] * v[j + 3];
    }
    for (; j < dim_; ++j) s0 += zv[j] * v[j];
    scores[i] = (s0 + s1) + (s2 + s3);
  }
  return scores;
}

double normalized_gain(std::size_t n) {
  if (n == 0) throw InvalidArgument("normalized_gain: n must be positive");
  return 1.0 / std::sqrt(static_cast<double>(n));
}

HbfMemory build(std::span<const Record> records, std::size_t dim, double gain,
                std::uint64_t key_seed, std::uint64_t value_seed) {
  if (dim < 2) throw InvalidArgument("build: dimension must be at least 2");
  HbfMemory mem = HbfMemory::empty(dim, gain, key_seed, value_seed);

  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return records[a].key < records[b].key;
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Record& r = records[order[i]];
    require_bytes(r.key, "build: key");
    require_bytes(r.value, "build: value");
    if (i > 0 && records[order[i - 1]].key == r.key) {
      throw InvalidArgument("build: duplicate key '" + r.key + "'");
    }
  }

  const Codebook keys = mem.key_codebook();
  const Codebook values = mem.value_codebook();
  HyperVector sum(dim);
  for (std::size_t idx : order) {
    const Record& r = records[idx];
    sum.add_scaled(convolve(keys.vector(r.key), values.vector(r.value)), gain);
  }
  return HbfMemory(std::move(sum), gain, records.size(), key_seed, value_seed);
}

HbfMemory insert(const HbfMemory& mem, std::string_view key,
                 std::string_view value) {
  require_bytes(key, "insert: key");
  require_bytes(value, "insert: value");
  const auto bound = convolve(mem.key_codebook().vector(key),
                              mem.value_codebook().vector(value));
  HyperVector sum = mem.vector();
  sum.add_scaled(bound, mem.gain());
  return HbfMemory(std::move(sum), mem.gain(), mem.item_count() + 1,
                   mem.key_seed(), mem.value_seed());
}

HyperVector correlate_query(const HbfMemory& mem, std::string_view key) {
  return correlate(mem.key_codebook().vector(key), mem.vector());
}

HyperVector correlate_query(const HbfMemory& mem, const HyperVector& key_vector) {
  return correlate(key_vector, mem.vector());
}

std::vector<LabelScore> score_codebook(const HyperVector& z,
                                       const LabelSet& labels) {
  const auto raw = labels.raw_scores(z);
  std::vector<LabelScore> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out.push_back({labels.labels()[i], raw[i]});
  }
  std::sort(out.begin(), out.end(), [](const LabelScore& a, const LabelScore& b) {
    return ranks_before(a.score, a.label, b.score, b.label);
  });
  return out;
}

std::vector<LabelScore> score_codebook(const HyperVector& z,
                                       std::vector<std::string> labels,
                                       std::uint64_t value_seed) {
  return score_codebook(z, LabelSet(std::move(labels), value_seed, z.dim()));
}

DecodeOutcome decide(std::span<const LabelScore> sorted_scores,
                     const DecoderConfig& cfg) {
  cfg.validate();
  if (sorted_scores.size() < cfg.top_k) {
    throw InvalidArgument("decode: need at least top_k labels");
  }
  DecodeOutcome out;
  out.best_score = sorted_scores[0].score;
  out.runner_up = sorted_scores[1].score;
  out.top_k.assign(sorted_scores.begin(), sorted_scores.begin() + cfg.top_k);
  out.hit = out.best_score >= cfg.tau &&
            (out.best_score - out.runner_up) >= cfg.delta;
  if (out.hit) out.label = sorted_scores[0].label;
  return out;
}

DecodeOutcome decode_vector(const HbfMemory& mem, const HyperVector& key_vector,
                            const DecoderConfig& cfg, const LabelSet& labels) {
  cfg.validate();
  if (labels.size() < cfg.top_k) {
    throw InvalidArgument("decode: need at least top_k labels");
  }
  if (labels.dim() != mem.dim()) {
    throw InvalidArgument("decode: label set dimension differs from memory");
  }
  const auto raw = labels.raw_scores(correlate_query(mem, key_vector));
  const auto& names = labels.labels();
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::partial_sort(order.begin(), order.begin() + cfg.top_k, order.end(),
                    [&](std::size_t a, std::size_t b) {
                      return ranks_before(raw[a], names[a], raw[b], names[b]);
                    });
  std::vector<LabelScore> top;
  top.reserve(cfg.top_k);
  for (std::size_t i = 0; i < cfg.top_k; ++i) {
    top.push_back({names[order[i]], raw[order[i]]});
  }
  return decide(top, cfg);
}

DecodeOutcome decode(const HbfMemory& mem, std::string_view key,
                     const DecoderConfig& cfg, const LabelSet& labels) {
  return decode_vector(mem, mem.key_codebook().vector(key), cfg, labels);
}

DecodeOutcome decode(const HbfMemory& mem, std::string_view key,
                     const DecoderConfig& cfg,
                     std::vector<std::string> labels) {
  return decode(mem, key, cfg,
                LabelSet(std::move(labels), mem.value_seed(), mem.dim()));
}

HbfMemory renormalize(const HbfMemory& mem, double new_gain) {
  if (!(new_gain > 0.0) || !std::isfinite(new_gain)) {
    throw InvalidArgument("renormalize: gain must be finite and positive");
  }
  if (mem.item_count() == 0) {
    throw InvalidArgument("renormalize: memory holds no items");
  }
  return HbfMemory(mem.vector().scaled(new_gain / mem.gain()), new_gain,
                   mem.item_count(), mem.key_seed(), mem.value_seed());
}

}  // namespace hbf
