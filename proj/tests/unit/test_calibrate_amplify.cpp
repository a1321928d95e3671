#include <gtest/gtest.h>

#include <cmath>

#include "hbf/amplify.hpp"
#include "hbf/bounds.hpp"
#include "hbf/calibrate.hpp"
#include "hbf/errors.hpp"

using namespace hbf;

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("label-" + std::to_string(i));
  return out;
}

std::vector<Record> records(std::size_t n, std::size_t labels) {
  std::vector<Record> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({"key-" + std::to_string(i), "label-" + std::to_string(i % labels)});
  }
  return out;
}

DecodeOutcome hit(const std::string& label, double s1) {
  DecodeOutcome o;
  o.hit = true;
  o.label = label;
  o.best_score = s1;
  return o;
}

DecodeOutcome miss(double s1) {
  DecodeOutcome o;
  o.best_score = s1;
  return o;
}

}  // namespace

TEST(Calibrate, SingleItemMemoryHitsWithRoom) {
  const std::size_t d = 2048;
  const auto mem = build(std::vector<Record>{{"only", "label-3"}}, d, 1.0, 1, 2);
  const LabelSet labels(names(10), 2, d);
  const auto cal = calibrate_decoder(mem, labels, 200, 0.01, 7);
  EXPECT_GT(cal.mu_hat, 4 * cal.evt_tau);
  EXPECT_EQ(cal.decoder.tau, std::max(cal.evt_tau, cal.mu_hat / 2));
  EXPECT_EQ(cal.decoder.delta, cal.mu_hat / 4);
  EXPECT_EQ(cal.decoder.top_k, 2u);
  const auto out = decode(mem, "only", cal.decoder, labels);
  ASSERT_TRUE(out.hit);
  EXPECT_EQ(out.label, "label-3");
}

TEST(Calibrate, EstimatesTrackTheory) {
  // With unit gain and +-1 codebooks: match mean about d^2. An impostor
  // score is a sum of about n d^3 signs, so its spread is about d^1.5 sqrt(n).
  const std::size_t d = 1024, n = 50;
  const auto mem = build(records(n, 20), d, 1.0, 3, 4);
  const LabelSet labels(names(20), 4, d);
  const auto cal = calibrate_decoder(mem, labels, 300, 0.01, 11);
  const double dd = double(d);
  EXPECT_NEAR(cal.mu_hat / (dd * dd), 1.0, 0.1);
  EXPECT_NEAR(cal.sigma_hat / (dd * std::sqrt(dd * double(n))), 1.0, 0.15);
  EXPECT_NEAR(cal.evt_tau, bounds::evt_threshold_exact(cal.sigma_hat, 20, 0.01), 1e-6);
}

TEST(Calibrate, LargerEpsLowersEvtThreshold) {
  const std::size_t d = 1024;
  const auto mem = build(records(200, 50), d, 1.0, 3, 4);
  const LabelSet labels(names(50), 4, d);
  const auto a = calibrate_decoder(mem, labels, 100, 0.01, 5);
  const auto b = calibrate_decoder(mem, labels, 100, 0.02, 5);
  EXPECT_LT(b.evt_tau, a.evt_tau);
  EXPECT_EQ(a.sigma_hat, b.sigma_hat);
}

TEST(Calibrate, Validation) {
  const std::size_t d = 256;
  const auto mem = build(records(5, 3), d, 1.0, 1, 2);
  const LabelSet labels(names(3), 2, d);
  EXPECT_THROW(calibrate_decoder(mem, labels, 99, 0.01, 1), InvalidArgument);
  EXPECT_THROW(calibrate_decoder(mem, labels, 100, 0.0, 1), InvalidArgument);
  EXPECT_THROW(calibrate_decoder(mem, labels, 100, 1.0, 1), InvalidArgument);
  EXPECT_THROW(calibrate_decoder(HbfMemory::empty(d, 1, 1, 2), labels, 100, 0.01, 1),
               InvalidArgument);
  EXPECT_EQ(calibrate_decoder(mem, labels, 100, 0.01, 1).decoder.tau,
            calibrate_decoder(mem, labels, 100, 0.01, 1).decoder.tau);
}

TEST(Calibrate, SignalSplitScalesWithPredictedSignal) {
  Calibration cal;
  cal.mu_hat = 1000.0;
  const auto clean = signal_split_decoder(cal, 100, 0, 0.0);
  EXPECT_EQ(clean.tau, 500.0);
  EXPECT_EQ(clean.delta, 0.0);
  // (100 - 2*10)(1 - 0.2) / 100 = 0.64
  EXPECT_NEAR(signal_split_decoder(cal, 100, 10, 0.1).tau, 320.0, 1e-12);
}

TEST(Vote, SingleReplicaIsIdentity) {
  const std::vector<DecodeOutcome> one = {hit("a", 5)};
  EXPECT_EQ(vote(one), one[0]);
  const std::vector<DecodeOutcome> rejected = {miss(3)};
  EXPECT_EQ(vote(rejected), rejected[0]);
}

TEST(Vote, MajorityRules) {
  const std::vector<DecodeOutcome> two_of_three = {hit("a", 1), hit("b", 9), hit("b", 7)};
  const auto v = vote(two_of_three);
  EXPECT_TRUE(v.hit);
  EXPECT_EQ(v.label, "b");
  EXPECT_EQ(v.best_score, 9);

  const std::vector<DecodeOutcome> split = {hit("a", 1), hit("b", 2), hit("c", 3)};
  EXPECT_FALSE(vote(split).hit);

  const std::vector<DecodeOutcome> all_reject = {miss(1), miss(2), miss(3)};
  EXPECT_FALSE(vote(all_reject).hit);

  const std::vector<DecodeOutcome> one_hit = {miss(1), hit("a", 2), miss(3)};
  EXPECT_FALSE(vote(one_hit).hit);

  const std::vector<DecodeOutcome> tie = {hit("a", 1), hit("a", 1), hit("b", 1), hit("b", 1)};
  EXPECT_FALSE(vote(tie).hit);

  EXPECT_THROW(vote(std::vector<DecodeOutcome>{}), InvalidArgument);
}

TEST(Vote, AmplifiedDecodeWithOneMemoryEqualsDecode) {
  const std::size_t d = 1024;
  const auto mem = build(records(20, 5), d, 1.0, 1, 2);
  const DecoderConfig cfg{0.0, 0.0, 2};
  const std::vector<HbfMemory> mems = {mem};
  for (const char* key : {"key-1", "key-7", "absent"}) {
    EXPECT_EQ(amplified_decode(mems, key, cfg, names(5)), decode(mem, key, cfg, names(5)));
  }
}

TEST(Vote, AmplifiedDecodeAcrossReplicas) {
  const std::size_t d = 1024;
  std::vector<HbfMemory> mems;
  for (std::uint64_t j = 0; j < 3; ++j) mems.push_back(build(records(10, 5), d, 1.0, 10 + j, 20 + j));
  const DecoderConfig cfg{-INFINITY, 0.0, 2};
  std::vector<LabelSet> sets;
  std::vector<DecoderConfig> decs(3, cfg);
  for (const auto& m : mems) sets.emplace_back(names(5), m.value_seed(), d);
  const auto out = amplified_decode(mems, "key-3", decs, sets);
  ASSERT_TRUE(out.hit);
  EXPECT_EQ(out.label, "label-3");
  EXPECT_THROW(amplified_decode(mems, "key-3", std::vector<DecoderConfig>{cfg}, sets),
               InvalidArgument);
  EXPECT_THROW((AmplifiedConfig{0}.validate()), InvalidArgument);
  EXPECT_EQ((AmplifiedConfig{3}.majority()), 2u);
  EXPECT_EQ((AmplifiedConfig{4}.majority()), 2u);
}
