#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "hbf/hypervector.hpp"

namespace hbf {

inline constexpr std::string_view kKeyNamespace = "key";
inline constexpr std::string_view kValueNamespace = "value";

/// Deterministic map from key bytes to a +-1 vector.
///
/// Coordinate signs come from a counter-mode pseudorandom function: the
/// (namespace, seed, key) triple is digested to a 64-bit stream key, and
/// block b of the stream is mix64(stream_key + (b + 1) * golden), each block
/// supplying the signs of 64 consecutive coordinates (bit set -> +1).
/// Nothing is stored, so the same triple regenerates the same vector in any
/// process.
class Codebook {
 public:
  /// Throws InvalidArgument if dim < 2.
  Codebook(std::string name_space, std::uint64_t seed, std::size_t dim);

  const std::string& name_space() const noexcept { return namespace_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t dim() const noexcept { return dim_; }

  /// Throws InvalidArgument for empty key bytes.
  SignVector vector(std::string_view key) const;

 private:
  std::string namespace_;
  std::uint64_t seed_;
  std::size_t dim_;
  std::uint64_t namespace_digest_;
};

SignVector codebook_vector(const Codebook& codebook, std::string_view key);

}  // namespace hbf
