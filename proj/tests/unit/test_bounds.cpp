#include <gtest/gtest.h>

#include <cmath>

#include "hbf/bounds.hpp"
#include "hbf/errors.hpp"
#include "hbf/rng.hpp"
#include "oracles.hpp"

using namespace hbf;
using namespace hbf::bounds;

TEST(Bounds, FpThresholdReference) {
  // sqrt(2 * 10000 * ln(100 / 0.01)) = sqrt(20000 * ln 1e4)
  EXPECT_NEAR(fp_threshold(100, 10000, 0.01), 429.193, 1e-3);
  EXPECT_NEAR(fp_threshold(100, 10000, 0.01), std::sqrt(20000.0 * std::log(1e4)), 1e-12);
  EXPECT_THROW(fp_threshold(100, 10000, 1.0), InvalidArgument);
  EXPECT_THROW(fp_threshold(100, 10000, 0.0), InvalidArgument);
  EXPECT_THROW(fp_threshold(0.5, 10000, 0.1), InvalidArgument);
}

TEST(Bounds, FpBoundRoundTrip) {
  for (double n : {1.0, 10.0, 100.0, 1e4}) {
    for (double d : {256.0, 4096.0, 1e4}) {
      for (double eps : {1e-9, 1e-4, 0.01, 0.3, 0.999}) {
        const double tau = fp_threshold(n, d, eps);
        EXPECT_NEAR(fp_bound(n, d, tau), eps, 1e-12 * eps) << n << " " << d << " " << eps;
      }
    }
  }
}

TEST(Bounds, FpBoundShape) {
  EXPECT_EQ(fp_bound(5, 100, 0), 1.0);
  EXPECT_NEAR(fp_bound(100, 10000, 429.19), 0.01, 1e-4);
  // Doubling tau: n exp(-4 tau^2 / 2d) = n (b / n)^4.
  const double b = fp_bound(100, 10000, 500);
  ASSERT_LT(b, 1.0);
  EXPECT_NEAR(fp_bound(100, 10000, 1000) / (100 * std::pow(b / 100, 4)), 1.0, 1e-12);
}

TEST(Bounds, SignalMeanReferenceValues) {
  EXPECT_EQ(signal_mean(10000, 500, 0.01), 8820.0);
  EXPECT_EQ(signal_mean(10000, 1000, 0.1), 6400.0);
  EXPECT_EQ(signal_mean(4096, 0, 0), 4096.0);
  EXPECT_THROW(signal_mean(100, 51, 0), InvalidArgument);
  EXPECT_THROW(signal_mean(100, 0, 0.5), InvalidArgument);
}

TEST(Bounds, FnBound) {
  // mu = 8820, t = mu / 2 -> both exponents are mu^2 / 8d = 972.405.
  EXPECT_LT(fn_bound(10000, 500, 0.01, 100), 1e-300);
  EXPECT_EQ(fn_bound(10000, 500, 0.01, 100, 4410), fn_bound(10000, 500, 0.01, 100));
  EXPECT_NEAR(fn_bound(10000, 500, 0.01, 100, 8819.999), 1.0, 1e-9);
  EXPECT_THROW(fn_bound(10000, 500, 0.01, 100, 0), InvalidArgument);
  EXPECT_THROW(fn_bound(10000, 500, 0.01, 100, 8820), InvalidArgument);
  // Monotone in H.
  double prev = 0;
  for (double h = 0; h <= 2000; h += 250) {
    const double b = fn_bound(1000, h / 10, 0.0, 10);
    EXPECT_GE(b, prev);
    prev = b;
  }
  EXPECT_NEAR(fn_bound_scaled(4, 1, 3, 2), std::exp(-2.0) + 3 * std::exp(-2.0), 1e-15);
}

TEST(Bounds, MarginFailureBound) {
  const auto r = margin_failure_bound(1, 100, 1, 10);
  EXPECT_NEAR(r.probability, 2 * std::exp(-12.5) + 20 * std::exp(-3.125), 1e-12);
  EXPECT_NEAR(r.probability, 0.87875, 1e-5);
  EXPECT_EQ(r.tau, 50.0);
  EXPECT_EQ(r.delta, 25.0);
  EXPECT_NEAR(margin_failure_bound(1, 100, 1, 0).probability, 2 * std::exp(-12.5), 1e-18);
  EXPECT_EQ(margin_failure_bound(1, 1, 1, 1000).probability, 1.0);
  EXPECT_THROW(margin_failure_bound(0, 100, 1, 1), InvalidArgument);
  EXPECT_THROW(margin_failure_bound(1, 100, 0, 1), InvalidArgument);
}

TEST(Bounds, InvNormCdfAgainstSeriesOracle) {
  for (double p : {1e-12, 1e-9, 1e-6, 1e-3, 0.02, 0.1, 0.3, 0.5, 0.7, 0.9, 0.975, 0.999,
                   1 - 1e-6, 1 - 1e-9}) {
    const double x = inv_norm_cdf(p);
    const double phi = static_cast<double>(oracle::phi_series(x));
    EXPECT_LE(std::abs(phi - p), 1e-9) << p;
  }
  EXPECT_EQ(inv_norm_cdf(0.5), 0.0);
  EXPECT_NEAR(inv_norm_cdf(0.975), 1.959964, 1e-5);
  EXPECT_NEAR(inv_norm_cdf(0.95), 1.644854, 1e-5);
  EXPECT_NEAR(inv_norm_cdf(0.025), -1.959964, 1e-5);
  EXPECT_THROW(inv_norm_cdf(0.0), InvalidArgument);
  EXPECT_THROW(inv_norm_cdf(1.0), InvalidArgument);
}

TEST(Bounds, InvNormSfTinyTails) {
  for (double q : {1e-20, 1e-12, 1e-6, 0.01, 0.4}) {
    const double x = inv_norm_sf(q);
    EXPECT_NEAR(norm_sf(x) / q, 1.0, 1e-9) << q;
  }
  EXPECT_NEAR(norm_cdf(1.959963984540054), 0.975, 1e-15);
}

TEST(Bounds, EvtThresholds) {
  // m = 1 reduces to an ordinary quantile.
  EXPECT_NEAR(evt_threshold_exact(1, 1, 0.05), inv_norm_cdf(0.95), 1e-12);
  EXPECT_NEAR(evt_threshold_exact(2.5, 1, 0.05), 2.5 * inv_norm_cdf(0.95), 1e-12);
  // Larger eps, lower threshold.
  EXPECT_LT(evt_threshold_exact(1, 1000, 0.1), evt_threshold_exact(1, 1000, 0.05));
  // The first-order approximation closes in on the exact value as m grows.
  double prev = INFINITY;
  for (double m : {1e2, 1e3, 1e4, 1e5}) {
    const double gap = std::abs(evt_threshold_approx(1, m, EvtOrder::first) -
                                evt_threshold_exact(1, m, 0.05));
    EXPECT_LT(gap, prev);
    prev = gap;
  }
  EXPECT_NEAR(evt_threshold_approx(1, 100, EvtOrder::first), std::sqrt(2 * std::log(100.0)),
              1e-15);
  EXPECT_THROW(evt_threshold_approx(1, 2, EvtOrder::gumbel), InvalidArgument);
  EXPECT_THROW(evt_threshold_exact(1, 10, 1.0), InvalidArgument);
}

TEST(Bounds, EvtExactMatchesMonteCarlo) {
  // m = 100, eps = 0.1, 4000 trials: 3 sigma band is +-0.0142.
  const double t = evt_threshold_exact(1, 100, 0.1);
  Rng rng(77);
  int exceed = 0;
  const int trials = 4000;
  for (int i = 0; i < trials; ++i) {
    double mx = -INFINITY;
    for (int j = 0; j < 100; ++j) mx = std::max(mx, rng.normal());
    exceed += mx > t;
  }
  EXPECT_NEAR(double(exceed) / trials, 0.1, 3 * std::sqrt(0.09 / trials));
}
