#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbf/index.hpp"

namespace hbf {

struct AmplifiedConfig {
  std::size_t replicas = 3;  // r; odd values avoid split votes

  void validate() const;
  std::size_t majority() const noexcept { return (replicas + 1) / 2; }
};

/// Plurality vote over Hit labels. The winner needs at least ceil(r/2) votes
/// and must be unique; otherwise the result is Reject. The returned outcome
/// carries the scores of the first memory that voted for the winner (or of
/// memory 0 on Reject), so r = 1 returns the single outcome unchanged.
DecodeOutcome vote(std::span<const DecodeOutcome> outcomes);

/// Decodes `key` in each memory (each with its own codebook seeds) and votes.
/// `decoders` and `label_sets` are per memory and must match in length.
DecodeOutcome amplified_decode(std::span<const HbfMemory> memories,
                               std::string_view key,
                               std::span<const DecoderConfig> decoders,
                               std::span<const LabelSet> label_sets);

/// One decoder for all memories over a shared label universe.
DecodeOutcome amplified_decode(std::span<const HbfMemory> memories,
                               std::string_view key, const DecoderConfig& cfg,
                               const std::vector<std::string>& labels);

}  // namespace hbf
