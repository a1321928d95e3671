#pragma once

#include <cstddef>

namespace hbf::bounds {

// Every probability bound is clamped to [0, 1].

/// min(1, n exp(-tau^2 / 2d)).
double fp_bound(double n, double d, double tau);
/// tau = sqrt(2 d ln(n / eps)), the inverse of fp_bound. Requires n >= 1,
/// 0 < eps < 1.
double fp_threshold(double n, double d, double eps);

/// Expected match score (d - 2H)(1 - 2 p_e), in units where <v, v> = d.
double signal_mean(double d, double hamming, double flip_rate);

/// exp(-((d-2H)(1-2p_e) - t)^2 / 2d) + n exp(-t^2 / 2d). Requires 0 < t < mu.
double fn_bound(double d, double hamming, double flip_rate, double n, double t);
/// fn_bound with the split t = mu / 2.
double fn_bound(double d, double hamming, double flip_rate, double n);
/// The same two-term bound for an arbitrary signal mean and noise scale:
/// exp(-(mu - t)^2 / 2 sigma^2) + m exp(-t^2 / 2 sigma^2).
double fn_bound_scaled(double mu, double sigma, double m, double t);

struct MarginBound {
  double probability;  // 2 e^{-rho^2 d / 8c} + 2 m e^{-rho^2 d / 32c}
  double tau;          // rho d / 2
  double delta;        // rho d / 4
};
MarginBound margin_failure_bound(double rho, double d, double c, double m);

/// Standard normal CDF and upper tail, from std::erfc.
double norm_cdf(double x);
double norm_sf(double x);

/// Phi^{-1}(p) for 0 < p < 1: rational approximation refined by one Halley
/// step against norm_cdf. |Phi(x) - p| <= 1e-9.
double inv_norm_cdf(double p);
/// Phi^{-1}(1 - q), accurate for tiny upper-tail mass q.
double inv_norm_sf(double q);

/// t with P{max of m iid N(0, sigma^2) > t} = eps:
/// sigma Phi^{-1}((1 - eps)^{1/m}).
double evt_threshold_exact(double sigma, double m, double eps);

enum class EvtOrder { first, gumbel };
/// sigma sqrt(2 ln m), or the Gumbel-corrected
/// sigma (sqrt(2 ln m) - (ln ln m + ln 4 pi) / (2 sqrt(2 ln m))).
/// Gumbel order requires m >= 3, first order m >= 1.
double evt_threshold_approx(double sigma, double m, EvtOrder order);

}  // namespace hbf::bounds
