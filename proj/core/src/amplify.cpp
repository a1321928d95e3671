#include "hbf/amplify.hpp"

#include <map>

#include "hbf/errors.hpp"

namespace hbf {

void AmplifiedConfig::validate() const {
  if (replicas < 1) throw InvalidArgument("AmplifiedConfig: r must be >= 1");
}

DecodeOutcome vote(std::span<const DecodeOutcome> outcomes) {
  if (outcomes.empty()) throw InvalidArgument("vote: no outcomes");
  const std::size_t majority = (outcomes.size() + 1) / 2;

  std::map<std::string, std::size_t> tally;
  for (const auto& o : outcomes) {
    if (o.hit) ++tally[o.label];
  }
  std::string winner;
  std::size_t best = 0;
  bool tied = false;
  for (const auto& [label, count] : tally) {
    if (count > best) {
      best = count;
      winner = label;
      tied = false;
    } else if (count == best) {
      tied = true;
    }
  }
  if (best < majority || tied) {
    DecodeOutcome rejected = outcomes.front();
    rejected.hit = false;
    rejected.label.clear();
    return rejected;
  }
  for (const auto& o : outcomes) {
    if (o.hit && o.label == winner) return o;
  }
  return outcomes.front();  // unreachable: the winner came from a hit
}

DecodeOutcome amplified_decode(std::span<const HbfMemory> memories,
                               std::string_view key,
                               std::span<const DecoderConfig> decoders,
                               std::span<const LabelSet> label_sets) {
  if (memories.empty()) throw InvalidArgument("amplified_decode: no memories");
  if (decoders.size() != memories.size() || label_sets.size() != memories.size()) {
    throw InvalidArgument(
        "amplified_decode: need one decoder and one label set per memory");
  }
  std::vector<DecodeOutcome> outcomes;
  outcomes.reserve(memories.size());
  for (std::size_t i = 0; i < memories.size(); ++i) {
    outcomes.push_back(decode(memories[i], key, decoders[i], label_sets[i]));
  }
  return vote(outcomes);
}

DecodeOutcome amplified_decode(std::span<const HbfMemory> memories,
                               std::string_view key, const DecoderConfig& cfg,
                               const std::vector<std::string>& labels) {
  std::vector<DecoderConfig> decoders(memories.size(), cfg);
  std::vector<LabelSet> label_sets;
  label_sets.reserve(memories.size());
  for (const auto& mem : memories) {
    label_sets.emplace_back(labels, mem.value_seed(), mem.dim());
  }
  return amplified_decode(memories, key, decoders, label_sets);
}

}  // namespace hbf
