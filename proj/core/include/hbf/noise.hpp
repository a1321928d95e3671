#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hbf/hypervector.hpp"
#include "hbf/index.hpp"

namespace hbf {

// Memory channels act on the stored vector M; key channels act on the query
// key embedding.
struct MemoryFlip {
  double rate = 0.0;  // p_e in [0, 0.5)
  friend bool operator==(const MemoryFlip&, const MemoryFlip&) = default;
};
struct MemoryGauss {
  double sigma = 0.0;
  friend bool operator==(const MemoryGauss&, const MemoryGauss&) = default;
};
struct KeyHamming {
  std::size_t flips = 0;  // H in [0, d]
  friend bool operator==(const KeyHamming&, const KeyHamming&) = default;
};
struct KeyGauss {
  double sigma = 0.0;
  friend bool operator==(const KeyGauss&, const KeyGauss&) = default;
};

using NoiseChannel = std::variant<MemoryFlip, MemoryGauss, KeyHamming, KeyGauss>;

struct NoiseSpec {
  NoiseChannel channel;
  std::uint64_t seed = 0;
};

/// Parses "mem-flip:0.01", "mem-gauss:0.5", "key-hamming:500",
/// "key-gauss:0.25". Throws InvalidArgument on unknown names or values out of
/// range (dimension-dependent checks happen when the channel is applied).
NoiseChannel parse_noise(std::string_view text);
std::string to_string(const NoiseChannel& channel);
bool acts_on_memory(const NoiseChannel& channel) noexcept;

/// Negates each coordinate independently with probability p_e.
HbfMemory corrupt_memory_flip(const HbfMemory& mem, double p_e,
                              std::uint64_t seed);
/// Adds i.i.d. N(0, sigma^2) to every coordinate.
HbfMemory corrupt_memory_gauss(const HbfMemory& mem, double sigma,
                               std::uint64_t seed);
/// Negates exactly `flips` distinct uniformly chosen coordinates, so
/// <key, result> == d - 2 * flips.
SignVector perturb_key_hamming(const SignVector& key, std::size_t flips,
                               std::uint64_t seed);
HyperVector perturb_key_gauss(const HyperVector& key, double sigma,
                              std::uint64_t seed);

/// Applies every memory channel in order, each with its own derived seed.
HbfMemory apply_memory_noise(const HbfMemory& mem,
                             std::span<const NoiseChannel> channels,
                             std::uint64_t seed);
/// Applies every key channel in order, each with its own derived seed.
HyperVector apply_key_noise(const SignVector& key,
                            std::span<const NoiseChannel> channels,
                            std::uint64_t seed);
HbfMemory apply(const HbfMemory& mem, const NoiseSpec& spec);

/// Totals used by the signal predictions: summed Hamming flips and the
/// combined flip rate of all MemoryFlip channels.
std::size_t total_key_flips(std::span<const NoiseChannel> channels) noexcept;
double combined_flip_rate(std::span<const NoiseChannel> channels) noexcept;

}  // namespace hbf
