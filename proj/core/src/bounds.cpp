#include "hbf/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hbf/errors.hpp"

namespace hbf::bounds {
namespace {

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

void require(bool ok, const char* message) {
  if (!ok) throw InvalidArgument(message);
}

// Acklam's rational approximation, relative error below 1.15e-9.
constexpr std::array<double, 6> kCentralNum = {
    -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
    1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
constexpr std::array<double, 5> kCentralDen = {
    -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
    6.680131188771972e+01,  -1.328068155288572e+01};
constexpr std::array<double, 6> kTailNum = {
    -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
    -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
constexpr std::array<double, 4> kTailDen = {
    7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
    3.754408661907416e+00};
constexpr double kTailSplit = 0.02425;

// Lower-tail quantile for p in (0, 0.5].
double lower_quantile_estimate(double p) {
  if (p < kTailSplit) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((kTailNum[0] * q + kTailNum[1]) * q + kTailNum[2]) * q +
              kTailNum[3]) * q + kTailNum[4]) * q + kTailNum[5]) /
           ((((kTailDen[0] * q + kTailDen[1]) * q + kTailDen[2]) * q +
             kTailDen[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((kCentralNum[0] * r + kCentralNum[1]) * r + kCentralNum[2]) * r +
            kCentralNum[3]) * r + kCentralNum[4]) * r + kCentralNum[5]) * q /
         (((((kCentralDen[0] * r + kCentralDen[1]) * r + kCentralDen[2]) * r +
            kCentralDen[3]) * r + kCentralDen[4]) * r + 1.0);
}

// One Halley step on Phi(x) = p, with p <= 0.5 so Phi(x) keeps full
// relative precision.
double refine_lower(double x, double p) {
  const double e = norm_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

double lower_quantile(double p) {
  return refine_lower(lower_quantile_estimate(p), p);
}

}  // namespace

double fp_bound(double n, double d, double tau) {
  require(n >= 0.0, "fp_bound: n must be non-negative");
  require(d > 0.0, "fp_bound: d must be positive");
  require(tau >= 0.0, "fp_bound: tau must be non-negative");
  if (n == 0.0) return 0.0;
  return clamp_probability(n * std::exp(-tau * tau / (2.0 * d)));
}

double fp_threshold(double n, double d, double eps) {
  require(n >= 1.0, "fp_threshold: n must be at least 1");
  require(d > 0.0, "fp_threshold: d must be positive");
  require(eps > 0.0 && eps < 1.0, "fp_threshold: eps must lie in (0, 1)");
  return std::sqrt(2.0 * d * std::log(n / eps));
}

double signal_mean(double d, double hamming, double flip_rate) {
  require(d > 0.0, "signal_mean: d must be positive");
  require(hamming >= 0.0 && hamming <= d / 2.0,
          "signal_mean: H must lie in [0, d/2]");
  require(flip_rate >= 0.0 && flip_rate < 0.5,
          "signal_mean: p_e must lie in [0, 0.5)");
  return (d - 2.0 * hamming) * (1.0 - 2.0 * flip_rate);
}

double fn_bound_scaled(double mu, double sigma, double m, double t) {
  require(sigma > 0.0, "fn_bound: noise scale must be positive");
  require(m >= 0.0, "fn_bound: candidate count must be non-negative");
  require(t > 0.0 && t < mu, "fn_bound: split t must lie in (0, mu)");
  const double var2 = 2.0 * sigma * sigma;
  const double miss = std::exp(-(mu - t) * (mu - t) / var2);
  const double impostor = m * std::exp(-t * t / var2);
  return clamp_probability(miss + impostor);
}

double fn_bound(double d, double hamming, double flip_rate, double n, double t) {
  return fn_bound_scaled(signal_mean(d, hamming, flip_rate), std::sqrt(d), n, t);
}

double fn_bound(double d, double hamming, double flip_rate, double n) {
  const double mu = signal_mean(d, hamming, flip_rate);
  return fn_bound(d, hamming, flip_rate, n, mu / 2.0);
}

MarginBound margin_failure_bound(double rho, double d, double c, double m) {
  require(rho > 0.0, "margin_failure_bound: rho must be positive");
  require(d > 0.0, "margin_failure_bound: d must be positive");
  require(c > 0.0, "margin_failure_bound: c must be positive");
  require(m >= 0.0, "margin_failure_bound: |Y| must be non-negative");
  const double energy = rho * rho * d;
  const double p = 2.0 * std::exp(-energy / (8.0 * c)) +
                   2.0 * m * std::exp(-energy / (32.0 * c));
  return {clamp_probability(p), rho * d / 2.0, rho * d / 4.0};
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double norm_sf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double inv_norm_cdf(double p) {
  require(p > 0.0 && p < 1.0, "inv_norm_cdf: p must lie in (0, 1)");
  if (p == 0.5) return 0.0;
  if (p < 0.5) return lower_quantile(p);
  return -lower_quantile(1.0 - p);
}

double inv_norm_sf(double q) {
  require(q > 0.0 && q < 1.0, "inv_norm_sf: q must lie in (0, 1)");
  if (q == 0.5) return 0.0;
  if (q < 0.5) return -lower_quantile(q);
  return lower_quantile(1.0 - q);
}

double evt_threshold_exact(double sigma, double m, double eps) {
  require(sigma > 0.0, "evt_threshold_exact: sigma must be positive");
  require(m >= 1.0, "evt_threshold_exact: m must be at least 1");
  require(eps > 0.0 && eps < 1.0, "evt_threshold_exact: eps must lie in (0, 1)");
  // Per-sample upper-tail mass 1 - (1 - eps)^{1/m}, formed without
  // cancellation.
  const double tail = -std::expm1(std::log1p(-eps) / m);
  return sigma * inv_norm_sf(tail);
}

double evt_threshold_approx(double sigma, double m, EvtOrder order) {
  require(sigma > 0.0, "evt_threshold_approx: sigma must be positive");
  if (order == EvtOrder::first) {
    require(m >= 1.0, "evt_threshold_approx: m must be at least 1");
    return sigma * std::sqrt(2.0 * std::log(m));
  }
  require(m >= 3.0, "evt_threshold_approx: Gumbel order needs m >= 3");
  const double root = std::sqrt(2.0 * std::log(m));
  const double correction =
      (std::log(std::log(m)) + std::log(4.0 * std::numbers::pi)) / (2.0 * root);
  return sigma * (root - correction);
}

}  // namespace hbf::bounds
