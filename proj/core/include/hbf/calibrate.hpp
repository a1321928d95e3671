#pragma once

#include <cstddef>
#include <cstdint>

#include "hbf/index.hpp"

namespace hbf {

inline constexpr std::size_t kMinProbeCount = 100;

struct Calibration {
  DecoderConfig decoder;
  double sigma_hat = 0.0;  // spread of impostor scores over non-member probes
  double mu_hat = 0.0;     // mean true score of held-in probe pairs
  double evt_tau = 0.0;    // evt_threshold_exact(sigma_hat, |Y|, eps)
  double eps = 0.0;
  std::size_t probe_count = 0;
};

/// Empirical decoder calibration against a concrete memory.
///
/// Non-member probes are fresh random +-1 keys (never codebook keys, so they
/// cannot collide with stored records); every label score they produce is an
/// impostor score, and sigma_hat is the pooled standard deviation. Held-in
/// probes superpose one fresh random pair (k', v') onto a copy of the memory
/// and measure <k' (*) M', v'>; mu_hat is their mean. Both probe streams come
/// from `seed` and never touch evaluation queries.
///
/// tau = max(evt_threshold_exact(sigma_hat, |Y|, eps), mu_hat / 2),
/// delta = mu_hat / 4, top_k = 2.
///
/// Throws InvalidArgument for probe_count < kMinProbeCount, eps outside
/// (0, 1), or a degenerate sigma_hat of zero (e.g. an empty memory).
Calibration calibrate_decoder(const HbfMemory& mem, const LabelSet& labels,
                              std::size_t probe_count, double eps,
                              std::uint64_t seed);

/// Decision rule of the false-negative analysis in calibrated units:
/// tau = mu_hat * signal_mean(d, H, p_e) / d / 2 and no margin.
DecoderConfig signal_split_decoder(const Calibration& calibration,
                                   std::size_t dim, std::size_t key_flips,
                                   double flip_rate);

}  // namespace hbf
