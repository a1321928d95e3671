#include "hbf/codebook.hpp"

#include <vector>

#include "hbf/errors.hpp"
#include "hbf/rng.hpp"

namespace hbf {
namespace {
constexpr std::uint64_t kCounterStep = 0x9E3779B97F4A7C15ULL;
}  // namespace

Codebook::Codebook(std::string name_space, std::uint64_t seed, std::size_t dim)
    : namespace_(std::move(name_space)),
      seed_(seed),
      dim_(dim),
      namespace_digest_(hash_bytes(namespace_, seed)) {
  if (dim < 2) {
    throw InvalidArgument("Codebook: dimension must be at least 2");
  }
}

SignVector Codebook::vector(std::string_view key) const {
  if (key.empty()) throw InvalidArgument("Codebook: empty key bytes");
  const std::uint64_t stream = hash_bytes(key, namespace_digest_ ^ seed_);
  std::vector<double> signs(dim_);
  std::uint64_t block = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i % 64 == 0) block = mix64(stream + (i / 64 + 1) * kCounterStep);
    signs[i] = (block >> (i % 64)) & 1U ? 1.0 : -1.0;
  }
  return SignVector(std::move(signs));
}

SignVector codebook_vector(const Codebook& codebook, std::string_view key) {
  return codebook.vector(key);
}

}  // namespace hbf
