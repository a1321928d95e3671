#include "hbf/noise.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

#include "hbf/errors.hpp"
#include "hbf/rng.hpp"

namespace hbf {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double parse_double(std::string_view text, std::string_view context) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw InvalidArgument("noise: bad number '" + std::string(text) + "' in '" +
                          std::string(context) + "'");
  }
  return value;
}

void check_flip_rate(double p_e) {
  if (!(p_e >= 0.0 && p_e < 0.5)) {
    throw InvalidArgument("memory flip rate must lie in [0, 0.5)");
  }
}

void check_sigma(double sigma, const char* what) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgument(std::string(what) + ": sigma must be finite and >= 0");
  }
}

}  // namespace

NoiseChannel parse_noise(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument("noise: expected name:value, got '" + std::string(text) + "'");
  }
  const auto name = text.substr(0, colon);
  const auto value = text.substr(colon + 1);
  if (name == "mem-flip") {
    const double p = parse_double(value, text);
    check_flip_rate(p);
    return MemoryFlip{p};
  }
  if (name == "mem-gauss") {
    const double s = parse_double(value, text);
    check_sigma(s, "mem-gauss");
    return MemoryGauss{s};
  }
  if (name == "key-gauss") {
    const double s = parse_double(value, text);
    check_sigma(s, "key-gauss");
    return KeyGauss{s};
  }
  if (name == "key-hamming") {
    std::size_t flips = 0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, flips);
    if (ec != std::errc{} || ptr != end) {
      throw InvalidArgument("noise: bad flip count in '" + std::string(text) + "'");
    }
    return KeyHamming{flips};
  }
  throw InvalidArgument("noise: unknown channel '" + std::string(name) + "'");
}

std::string to_string(const NoiseChannel& channel) {
  auto number = [](double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
  };
  return std::visit(
      overloaded{
          [&](const MemoryFlip& c) { return "mem-flip:" + number(c.rate); },
          [&](const MemoryGauss& c) { return "mem-gauss:" + number(c.sigma); },
          [&](const KeyHamming& c) { return "key-hamming:" + std::to_string(c.flips); },
          [&](const KeyGauss& c) { return "key-gauss:" + number(c.sigma); },
      },
      channel);
}

bool acts_on_memory(const NoiseChannel& channel) noexcept {
  return std::holds_alternative<MemoryFlip>(channel) ||
         std::holds_alternative<MemoryGauss>(channel);
}

HbfMemory corrupt_memory_flip(const HbfMemory& mem, double p_e,
                              std::uint64_t seed) {
  check_flip_rate(p_e);
  if (p_e == 0.0) return mem;
  Rng rng(seed);
  const auto in = mem.vector().values();
  std::vector<double> out(in.begin(), in.end());
  for (double& x : out) {
    if (rng.bernoulli(p_e)) x = -x;
  }
  return mem.with_vector(HyperVector(std::move(out)));
}

HbfMemory corrupt_memory_gauss(const HbfMemory& mem, double sigma,
                               std::uint64_t seed) {
  check_sigma(sigma, "corrupt_memory_gauss");
  if (sigma == 0.0) return mem;
  Rng rng(seed);
  const auto in = mem.vector().values();
  std::vector<double> out(in.begin(), in.end());
  for (double& x : out) x += sigma * rng.normal();
  return mem.with_vector(HyperVector(std::move(out)));
}

SignVector perturb_key_hamming(const SignVector& key, std::size_t flips,
                               std::uint64_t seed) {
  const std::size_t d = key.dim();
  if (flips > d) {
    throw InvalidArgument("perturb_key_hamming: H exceeds the dimension");
  }
  std::vector<double> out(key.values().begin(), key.values().end());
  if (flips == 0) return SignVector(std::move(out));
  // Partial Fisher-Yates: the first `flips` slots are a uniform H-subset.
  std::vector<std::size_t> index(d);
  std::iota(index.begin(), index.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < flips; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(d - i));
    std::swap(index[i], index[j]);
    out[index[i]] = -out[index[i]];
  }
  return SignVector(std::move(out));
}

HyperVector perturb_key_gauss(const HyperVector& key, double sigma,
                              std::uint64_t seed) {
  check_sigma(sigma, "perturb_key_gauss");
  if (sigma == 0.0) return key;
  Rng rng(seed);
  std::vector<double> out(key.values().begin(), key.values().end());
  for (double& x : out) x += sigma * rng.normal();
  return HyperVector(std::move(out));
}

HbfMemory apply_memory_noise(const HbfMemory& mem,
                             std::span<const NoiseChannel> channels,
                             std::uint64_t seed) {
  HbfMemory out = mem;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const std::uint64_t s = derive_seed(seed, "memory-noise", i);
    if (const auto* flip = std::get_if<MemoryFlip>(&channels[i])) {
      out = corrupt_memory_flip(out, flip->rate, s);
    } else if (const auto* gauss = std::get_if<MemoryGauss>(&channels[i])) {
      out = corrupt_memory_gauss(out, gauss->sigma, s);
    }
  }
  return out;
}

HyperVector apply_key_noise(const SignVector& key,
                            std::span<const NoiseChannel> channels,
                            std::uint64_t seed) {
  // Hamming flips act on the sign pattern, so they go first; Gaussian
  // perturbations are added afterwards.
  SignVector signs = key;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (const auto* ham = std::get_if<KeyHamming>(&channels[i])) {
      signs = perturb_key_hamming(signs, ham->flips, derive_seed(seed, "key-noise", i));
    }
  }
  HyperVector out = signs.vector();
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (const auto* gauss = std::get_if<KeyGauss>(&channels[i])) {
      out = perturb_key_gauss(out, gauss->sigma, derive_seed(seed, "key-noise", i));
    }
  }
  return out;
}

HbfMemory apply(const HbfMemory& mem, const NoiseSpec& spec) {
  if (!acts_on_memory(spec.channel)) {
    throw InvalidArgument("apply: channel acts on query keys, not memories");
  }
  return apply_memory_noise(mem, std::span(&spec.channel, 1), spec.seed);
}

std::size_t total_key_flips(std::span<const NoiseChannel> channels) noexcept {
  std::size_t total = 0;
  for (const auto& c : channels) {
    if (const auto* ham = std::get_if<KeyHamming>(&c)) total += ham->flips;
  }
  return total;
}

double combined_flip_rate(std::span<const NoiseChannel> channels) noexcept {
  // Independent flips compose: (1 - 2p) multiplies.
  double keep = 1.0;
  for (const auto& c : channels) {
    if (const auto* flip = std::get_if<MemoryFlip>(&c)) keep *= 1.0 - 2.0 * flip->rate;
  }
  return (1.0 - keep) / 2.0;
}

}  // namespace hbf
