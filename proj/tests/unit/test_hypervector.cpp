#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "hbf/errors.hpp"
#include "hbf/fft.hpp"
#include "hbf/hypervector.hpp"
#include "hbf/rng.hpp"
#include "oracles.hpp"

using namespace hbf;

namespace {

std::vector<double> gaussian(std::size_t d, Rng& rng) {
  std::vector<double> v(d);
  for (auto& x : v) x = rng.normal();
  return v;
}

double max_abs_diff(std::span<const double> a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(HyperVector, RejectsNonFiniteAndEmpty) {
  EXPECT_THROW(HyperVector(std::size_t{0}), InvalidArgument);
  EXPECT_THROW(HyperVector(std::vector<double>{}), InvalidArgument);
  EXPECT_THROW(HyperVector(std::vector<double>{1.0, NAN}), InvalidArgument);
  EXPECT_THROW(HyperVector(std::vector<double>{INFINITY, 1.0}), InvalidArgument);
}

TEST(HyperVector, SignVectorOnlyAcceptsPlusMinusOne) {
  EXPECT_NO_THROW(SignVector({1.0, -1.0, 1.0}));
  EXPECT_THROW(SignVector({1.0, 0.5}), InvalidArgument);
  EXPECT_THROW(SignVector({1.0, 0.0}), InvalidArgument);
  const SignVector s({1.0, -1.0, -1.0, 1.0});
  EXPECT_EQ(squared_norm(s), 4.0);
}

TEST(HyperVector, InnerProductAndCosine) {
  const HyperVector a({1.0, 2.0, 3.0});
  const HyperVector b({4.0, -5.0, 6.0});
  EXPECT_DOUBLE_EQ(inner_product(a, b), 12.0);
  EXPECT_DOUBLE_EQ(norm(HyperVector({3.0, 4.0})), 5.0);
  EXPECT_DOUBLE_EQ(cosine(a, a), 1.0);
  EXPECT_DOUBLE_EQ(cosine(a, a.scaled(-2.0)), -1.0);
  EXPECT_THROW(cosine(a, HyperVector(3)), InvalidArgument);
  EXPECT_THROW(inner_product(a, HyperVector(4)), InvalidArgument);
}

TEST(HyperVector, ConvolutionMatchesDefinition) {
  Rng rng(11);
  for (std::size_t d : {2u, 3u, 7u, 16u, 30u, 64u}) {
    const auto a = gaussian(d, rng);
    const auto b = gaussian(d, rng);
    const auto conv = oracle::convolve(a, b);
    const auto corr = oracle::correlate(a, b);
    const HyperVector ha(a), hb(b);
    EXPECT_LT(max_abs_diff(convolve_naive(ha, hb).values(), conv), 1e-12) << d;
    EXPECT_LT(max_abs_diff(correlate_naive(ha, hb).values(), corr), 1e-12) << d;
    EXPECT_LT(max_abs_diff(convolve(ha, hb).values(), conv), 1e-10) << d;
    EXPECT_LT(max_abs_diff(correlate(ha, hb).values(), corr), 1e-10) << d;
  }
}

TEST(HyperVector, HandComputedConvolution) {
  // a = (1,2,3), b = (4,5,6):
  // c0 = 1*4 + 2*6 + 3*5 = 31, c1 = 1*5 + 2*4 + 3*6 = 31, c2 = 1*6 + 2*5 + 3*4 = 28
  const HyperVector a({1, 2, 3}), b({4, 5, 6});
  EXPECT_EQ(convolve_naive(a, b), HyperVector({31, 31, 28}));
  // r0 = 1*4 + 2*5 + 3*6 = 32, r1 = 1*5 + 2*6 + 3*4 = 29, r2 = 1*6 + 2*4 + 3*5 = 29
  EXPECT_EQ(correlate_naive(a, b), HyperVector({32, 29, 29}));
}

TEST(HyperVector, FftMatchesNaiveAtPowerOfTwo) {
  Rng rng(12);
  for (std::size_t d : {256u, 1024u}) {
    for (int rep = 0; rep < 5; ++rep) {
      const HyperVector a(gaussian(d, rng)), b(gaussian(d, rng));
      const auto naive = convolve_naive(a, b);
      const auto fast = convolve_fft(a, b);
      std::vector<double> n(naive.values().begin(), naive.values().end());
      EXPECT_LT(max_abs_diff(fast.values(), n), 1e-9);
      const auto cn = correlate_naive(a, b);
      std::vector<double> c(cn.values().begin(), cn.values().end());
      EXPECT_LT(max_abs_diff(correlate_fft(a, b).values(), c), 1e-9);
    }
  }
  EXPECT_THROW(convolve_fft(HyperVector(6), HyperVector(6)), InvalidArgument);
}

TEST(HyperVector, ImpulseIsConvolutionIdentity) {
  Rng rng(13);
  const HyperVector a(gaussian(64, rng));
  const auto e = HyperVector::impulse(64);
  std::vector<double> av(a.values().begin(), a.values().end());
  EXPECT_LT(max_abs_diff(convolve(a, e).values(), av), 1e-12);
  EXPECT_LT(max_abs_diff(correlate(e, a).values(), av), 1e-12);
}

TEST(HyperVector, AlgebraicProperties) {
  Rng rng(14);
  const std::size_t d = 128;
  const HyperVector a(gaussian(d, rng)), b(gaussian(d, rng)), c(gaussian(d, rng));
  // Commutativity.
  const auto ab = convolve(a, b), ba = convolve(b, a);
  std::vector<double> bav(ba.values().begin(), ba.values().end());
  EXPECT_LT(max_abs_diff(ab.values(), bav), 1e-9);
  // Correlation is the adjoint of convolution: <a * b, c> = <b, a (*) c>.
  EXPECT_NEAR(inner_product(ab, c), inner_product(b, correlate(a, c)), 1e-8);
  // Bilinearity.
  HyperVector sum = b;
  sum += c;
  const auto lhs = convolve(a, sum);
  HyperVector rhs = convolve(a, b);
  rhs += convolve(a, c);
  std::vector<double> rv(rhs.values().begin(), rhs.values().end());
  EXPECT_LT(max_abs_diff(lhs.values(), rv), 1e-9);
}

TEST(Fft, ParsevalAndRoundTrip) {
  Rng rng(15);
  const std::size_t d = 512;
  const auto x = gaussian(d, rng);
  const auto spectrum = fft::forward_real(x);
  double time_energy = 0.0, freq_energy = 0.0;
  for (double v : x) time_energy += v * v;
  for (const auto& z : spectrum) freq_energy += std::norm(z);
  EXPECT_NEAR(freq_energy / static_cast<double>(d), time_energy, 1e-8 * time_energy);
  EXPECT_LT(max_abs_diff(fft::inverse_real(spectrum), x), 1e-12);
}

TEST(Fft, PowerOfTwoCheck) {
  EXPECT_TRUE(fft::is_power_of_two(1));
  EXPECT_TRUE(fft::is_power_of_two(4096));
  EXPECT_FALSE(fft::is_power_of_two(0));
  EXPECT_FALSE(fft::is_power_of_two(96));
}
