#include "hbf/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hbf/bounds.hpp"
#include "hbf/errors.hpp"
#include "hbf/rng.hpp"

namespace hbf {
namespace {

HyperVector random_signs(std::size_t dim, Rng& rng) {
  std::vector<double> v(dim);
  std::uint64_t block = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i % 64 == 0) block = rng.next();
    v[i] = (block >> (i % 64)) & 1U ? 1.0 : -1.0;
  }
  return HyperVector(std::move(v));
}

}  // namespace

Calibration calibrate_decoder(const HbfMemory& mem, const LabelSet& labels,
                              std::size_t probe_count, double eps,
                              std::uint64_t seed) {
  if (probe_count < kMinProbeCount) {
    throw InvalidArgument("calibrate_decoder: need at least " +
                          std::to_string(kMinProbeCount) + " probes");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw InvalidArgument("calibrate_decoder: eps must lie in (0, 1)");
  }
  if (labels.dim() != mem.dim()) {
    throw InvalidArgument("calibrate_decoder: label set dimension differs from memory");
  }
  const auto& values = mem.vector().values();
  if (std::all_of(values.begin(), values.end(), [](double x) { return x == 0.0; })) {
    throw InvalidArgument("calibrate_decoder: memory is empty");
  }
  const std::size_t d = mem.dim();

  std::vector<double> impostor;
  impostor.reserve(probe_count * labels.size());
  for (std::size_t i = 0; i < probe_count; ++i) {
    Rng rng(derive_seed(seed, "calibration-impostor", i));
    const auto scores = labels.raw_scores(correlate(random_signs(d, rng), mem.vector()));
    impostor.insert(impostor.end(), scores.begin(), scores.end());
  }
  double mean = 0.0;
  for (double s : impostor) mean += s;
  mean /= static_cast<double>(impostor.size());
  double ss = 0.0;
  for (double s : impostor) ss += (s - mean) * (s - mean);
  const double sigma_hat =
      std::sqrt(ss / static_cast<double>(std::max<std::size_t>(impostor.size() - 1, 1)));
  if (!(sigma_hat > 0.0) || !std::isfinite(sigma_hat)) {
    throw InvalidArgument("calibrate_decoder: impostor scores have zero spread "
                          "(empty or degenerate memory)");
  }

  double match_sum = 0.0;
  for (std::size_t i = 0; i < probe_count; ++i) {
    Rng rng(derive_seed(seed, "calibration-held-in", i));
    const HyperVector key = random_signs(d, rng);
    const HyperVector value = random_signs(d, rng);
    HyperVector held_in = mem.vector();
    held_in.add_scaled(convolve(key, value), mem.gain());
    match_sum += inner_product(correlate(key, held_in), value);
  }
  const double mu_hat = match_sum / static_cast<double>(probe_count);

  Calibration out;
  out.sigma_hat = sigma_hat;
  out.mu_hat = mu_hat;
  out.eps = eps;
  out.probe_count = probe_count;
  out.evt_tau = bounds::evt_threshold_exact(sigma_hat,
                                            static_cast<double>(labels.size()), eps);
  out.decoder.tau = std::max(out.evt_tau, mu_hat / 2.0);
  out.decoder.delta = std::max(0.0, mu_hat / 4.0);
  out.decoder.top_k = 2;
  return out;
}

DecoderConfig signal_split_decoder(const Calibration& calibration,
                                   std::size_t dim, std::size_t key_flips,
                                   double flip_rate) {
  const auto d = static_cast<double>(dim);
  const double predicted =
      bounds::signal_mean(d, static_cast<double>(key_flips), flip_rate);
  DecoderConfig cfg;
  cfg.tau = calibration.mu_hat * (predicted / d) / 2.0;
  cfg.delta = 0.0;
  cfg.top_k = 2;
  return cfg;
}

}  // namespace hbf
