#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hbf/errors.hpp"
#include "hbf/index.hpp"

using namespace hbf;

namespace {

std::vector<Record> records(std::size_t n, std::size_t labels) {
  std::vector<Record> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({"key-" + std::to_string(i), "label-" + std::to_string(i % labels)});
  }
  return out;
}

std::vector<std::string> label_names(std::size_t labels) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels; ++i) out.push_back("label-" + std::to_string(i));
  return out;
}

}  // namespace

TEST(Index, BuildIsOrderIndependentBitForBit) {
  auto recs = records(50, 7);
  const auto a = build(recs, 1024, 1.0, 3, 4);
  std::mt19937 shuffle(9);
  std::shuffle(recs.begin(), recs.end(), shuffle);
  const auto b = build(recs, 1024, 1.0, 3, 4);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.item_count(), 50u);
}

TEST(Index, BuildValidatesInput) {
  auto recs = records(3, 2);
  EXPECT_THROW(build(recs, 1, 1.0, 1, 2), InvalidArgument);
  EXPECT_THROW(build(recs, 64, 0.0, 1, 2), InvalidArgument);
  EXPECT_THROW(build(recs, 64, -1.0, 1, 2), InvalidArgument);
  recs.push_back(recs.front());
  EXPECT_THROW(build(recs, 64, 1.0, 1, 2), InvalidArgument);
  EXPECT_THROW(build(std::vector<Record>{{"", "v"}}, 64, 1.0, 1, 2), InvalidArgument);
  EXPECT_THROW(build(std::vector<Record>{{"k", ""}}, 64, 1.0, 1, 2), InvalidArgument);
}

TEST(Index, EmptyBuildIsZeroMemory) {
  const auto mem = build(std::vector<Record>{}, 64, 1.0, 1, 2);
  EXPECT_EQ(mem.item_count(), 0u);
  EXPECT_EQ(squared_norm(mem.vector()), 0.0);
  EXPECT_EQ(mem, HbfMemory::empty(64, 1.0, 1, 2));
}

TEST(Index, InsertMatchesBuild) {
  const auto recs = records(20, 4);
  const auto built = build(recs, 512, 0.5, 8, 9);
  auto mem = HbfMemory::empty(512, 0.5, 8, 9);
  for (const auto& r : recs) mem = insert(mem, r.key, r.value);
  ASSERT_EQ(mem.item_count(), built.item_count());
  for (std::size_t i = 0; i < 512; ++i) {
    EXPECT_NEAR(mem.vector()[i], built.vector()[i], 1e-9);
  }
  // One insert into an empty memory is exactly the bound pair.
  const auto single = insert(HbfMemory::empty(512, 0.5, 8, 9), "a", "b");
  EXPECT_EQ(single, build(std::vector<Record>{{"a", "b"}}, 512, 0.5, 8, 9));
}

TEST(Index, UnbindingRecoversValueDirection) {
  // cos(k (*) (k * v), v) is about 1/sqrt(2) for random signs.
  const std::size_t d = 8192;
  const Codebook keys("key", 1, d), values("value", 2, d);
  int good = 0;
  for (int i = 0; i < 500; ++i) {
    const auto k = keys.vector("k" + std::to_string(i));
    const auto v = values.vector("v" + std::to_string(i));
    if (cosine(correlate(k, convolve(k, v)), v) >= 0.6) ++good;
  }
  EXPECT_GE(good, 495);
}

TEST(Index, SingleItemDecodesWithDefaultSplit) {
  const std::size_t d = 2048;
  const auto mem = build(std::vector<Record>{{"fileA", "red"}}, d, 1.0, 1, 2);
  const LabelSet labels({"red", "green", "blue"}, 2, d);
  // Match score is about d^2; the theorem's split tau = d^2/2, delta = d^2/4.
  const double dd = double(d) * d;
  const auto out = decode(mem, "fileA", {dd / 2, dd / 4, 2}, labels);
  ASSERT_TRUE(out.hit);
  EXPECT_EQ(out.label, "red");
  EXPECT_EQ(out.top_k.size(), 2u);
  EXPECT_EQ(out.top_k[0].label, "red");
  EXPECT_FALSE(decode(mem, "fileB", {dd / 2, dd / 4, 2}, labels).hit);
}

TEST(Index, ManyItemsDecodeByArgmax) {
  const std::size_t d = 4096;
  const auto recs = records(30, 10);
  const auto mem = build(recs, d, normalized_gain(recs.size()), 5, 6);
  const LabelSet labels(label_names(10), 6, d);
  const DecoderConfig any{-INFINITY, 0.0, 2};
  for (const auto& r : recs) {
    const auto out = decode(mem, r.key, any, labels);
    ASSERT_TRUE(out.hit);
    EXPECT_EQ(out.label, r.value) << r.key;
  }
}

TEST(Index, ScoreCodebookSortsAndBreaksTiesByLabel) {
  const std::size_t d = 64;
  // z = 0 makes every score tie at 0.
  const auto scores = score_codebook(HyperVector(d), {"b", "c", "a"}, 3);
  ASSERT_EQ(scores.size(), 3u);
  EXPECT_EQ(scores[0].label, "a");
  EXPECT_EQ(scores[1].label, "b");
  EXPECT_EQ(scores[2].label, "c");
  const LabelSet set({"x", "y", "z"}, 3, d);
  const auto z = HyperVector(std::vector<double>(set.vector(1).begin(), set.vector(1).end()));
  const auto sorted = score_codebook(z, set);
  EXPECT_EQ(sorted[0].label, "y");
  EXPECT_EQ(sorted[0].score, double(d));
  EXPECT_TRUE(std::is_sorted(sorted.begin(), sorted.end(),
                             [](auto& a, auto& b) { return a.score > b.score; }));
}

TEST(Index, DecideAppliesThresholdAndMargin) {
  const std::vector<LabelScore> s = {{"a", 10.0}, {"b", 6.0}, {"c", 1.0}};
  EXPECT_TRUE(decide(s, {10.0, 4.0, 2}).hit);    // both bounds inclusive
  EXPECT_FALSE(decide(s, {10.1, 0.0, 2}).hit);   // below tau
  EXPECT_FALSE(decide(s, {0.0, 4.1, 2}).hit);    // margin too small
  EXPECT_TRUE(decide(s, {-INFINITY, 0.0, 2}).hit);
  EXPECT_FALSE(decide(s, {INFINITY, 0.0, 2}).hit);
  const auto out = decide(s, {0.0, 0.0, 3});
  EXPECT_EQ(out.label, "a");
  EXPECT_EQ(out.best_score, 10.0);
  EXPECT_EQ(out.runner_up, 6.0);
  EXPECT_EQ(out.top_k.size(), 3u);
  const auto rejected = decide(s, {20.0, 0.0, 2});
  EXPECT_TRUE(rejected.label.empty());
  EXPECT_EQ(rejected.best_score, 10.0);
  EXPECT_THROW(decide(s, {0.0, 0.0, 4}), InvalidArgument);
}

TEST(Index, DecoderConfigValidation) {
  EXPECT_THROW((DecoderConfig{NAN, 0.0, 2}.validate()), InvalidArgument);
  EXPECT_THROW((DecoderConfig{0.0, -1.0, 2}.validate()), InvalidArgument);
  EXPECT_THROW((DecoderConfig{0.0, 0.0, 1}.validate()), InvalidArgument);
  EXPECT_NO_THROW((DecoderConfig{INFINITY, 0.0, 2}.validate()));
}

TEST(Index, LabelSetValidation) {
  EXPECT_THROW(LabelSet({}, 1, 64), InvalidArgument);
  EXPECT_THROW(LabelSet({"a", "a"}, 1, 64), InvalidArgument);
  EXPECT_THROW(LabelSet({"a", ""}, 1, 64), InvalidArgument);
  const LabelSet set({"a", "b"}, 1, 64);
  EXPECT_EQ(set.find("b"), 1u);
  EXPECT_EQ(set.find("zz"), 2u);
}

TEST(Index, RenormalizeScalesScoresNotRanking) {
  const std::size_t d = 1024;
  const auto recs = records(10, 5);
  const auto mem = build(recs, d, 1.0, 1, 2);
  const auto half = renormalize(mem, 0.5);
  EXPECT_EQ(half.gain(), 0.5);
  EXPECT_EQ(half.item_count(), mem.item_count());
  const LabelSet labels(label_names(5), 2, d);
  const auto a = score_codebook(correlate_query(mem, "key-3"), labels);
  const auto b = score_codebook(correlate_query(half, "key-3"), labels);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].label, b[i].label);
    EXPECT_NEAR(b[i].score, a[i].score / 2, 1e-6 * std::abs(a[i].score) + 1e-9);
  }
  EXPECT_THROW(renormalize(mem, 0.0), InvalidArgument);
  EXPECT_THROW(renormalize(HbfMemory::empty(d, 1.0, 1, 2), 2.0), InvalidArgument);
}

TEST(Index, NormalizedGain) {
  EXPECT_DOUBLE_EQ(normalized_gain(100), 0.1);
  EXPECT_THROW(normalized_gain(0), InvalidArgument);
}
