#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace hbf {

// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Stable 64-bit digest of a byte string under a seed. Not cryptographic;
// identical across platforms and process restarts.
std::uint64_t hash_bytes(std::string_view bytes, std::uint64_t seed) noexcept;

// Seed for one unit of work: mixes the master seed, a stream name and an
// index. Distinct (name, index) pairs give independent streams.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream,
                          std::uint64_t index) noexcept;

// xoshiro256** seeded through SplitMix64. All sampling helpers are written
// out here (not std::*_distribution) so that a seed reproduces the same
// stream with any standard library.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept { return next(); }

  std::uint64_t next() noexcept;
  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept;
  // Uniform in (0, 1].
  double uniform_open_low() noexcept;
  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;
  bool bernoulli(double p) noexcept;
  // Standard normal via Box-Muller; the second variate is cached.
  double normal() noexcept;

 private:
  std::array<std::uint64_t, 4> s_{};
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace hbf
