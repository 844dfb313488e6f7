// Copyright 2026 The PoseForge Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "poseforge/adain.hpp"
#include "poseforge/error.hpp"
#include "poseforge/tensor.hpp"

namespace poseforge {
namespace {

ErrorCode codeOf(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

TEST(ChannelStats, HandValues) {
  const FeatureTensor t(1, 2, 2, {1, 2, 3, 4});
  const ChannelStats s = channelStats(t);
  EXPECT_DOUBLE_EQ(s.mean[0], 2.5);
  EXPECT_NEAR(s.std[0], std::sqrt(1.25 + 1e-5), 1e-15);
  EXPECT_NEAR(s.std[0], 1.11804, 1e-5);
}

TEST(ChannelStats, MatchesTwoPassOracle) {
  testing::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const FeatureTensor t = testing::randomTensor(rng, 4, 5, 7, -10, 10);
    const ChannelStats s = channelStats(t);
    const auto o = testing::twoPassStats(testing::toVector(t), 4, 35, kStatsEpsilon);
    for (int c = 0; c < 4; ++c) {
      EXPECT_NEAR(s.mean[c], o.mean[c], 1e-12);
      EXPECT_NEAR(s.std[c], o.std[c], 1e-12);
    }
  }
}

TEST(ChannelStats, ConstantChannelStdIsSqrtEpsilon) {
  const ChannelStats s = channelStats(FeatureTensor::filled(2, 3, 3, 4.0));
  EXPECT_EQ(s.mean[1], 4.0);
  EXPECT_NEAR(s.std[1], std::sqrt(kStatsEpsilon), 1e-15);
}

TEST(Adain, HandValue) {
  const FeatureTensor content(1, 2, 2, {1, 2, 3, 4});
  const FeatureTensor style(1, 2, 2, {10, 10, 20, 20});
  const FeatureTensor out = adain(content, style);
  const double sigmaS = std::sqrt(25.0 + 1e-5);
  EXPECT_NEAR(out.at(0, 0, 0), 15 + sigmaS * (1 - 2.5) / std::sqrt(1.25 + 1e-5), 1e-12);
  EXPECT_NEAR(out.at(0, 0, 0), 8.2918, 1e-4);
}

TEST(Adain, MatchesElementwiseOracleAndStyleMoments) {
  testing::Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    const FeatureTensor content = testing::randomTensor(rng, 3, 6, 6, -5, 5);
    const FeatureTensor style = testing::randomTensor(rng, 3, 4, 9, 0, 20);
    const FeatureTensor out = adain(content, style);
    const auto expected = testing::adainOracle(testing::toVector(content),
                                               testing::toVector(style), 3, 36, kStatsEpsilon);
    for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(out.data()[k], expected[k], 1e-9);
    const ChannelStats so = channelStats(out), ss = channelStats(style);
    for (int c = 0; c < 3; ++c) {
      EXPECT_NEAR(so.mean[c], ss.mean[c], 1e-5);
      EXPECT_NEAR(so.std[c], ss.std[c], 1e-4);
    }
  }
}

TEST(Adain, LowVarianceContentBiasesOutputStd) {
  // var_c = 1e-4, so the epsilon in the content std shrinks the output std
  const FeatureTensor content(1, 2, 2, {-0.01, 0.01, -0.01, 0.01});
  const FeatureTensor style(1, 2, 2, {0, 4, 0, 4});
  const ChannelStats so = channelStats(adain(content, style));
  const double varC = 1e-4, varS = 4.0;
  const double expected = std::sqrt((varS + kStatsEpsilon) * varC / (varC + kStatsEpsilon) +
                                    kStatsEpsilon);
  EXPECT_NEAR(so.std[0], expected, 1e-12);
  EXPECT_GT(std::abs(so.std[0] - std::sqrt(varS + kStatsEpsilon)), 1e-4);
}

TEST(Adain, ChannelMismatch) {
  EXPECT_EQ(codeOf([] { adain(FeatureTensor::filled(2, 2, 2, 0), FeatureTensor::filled(3, 2, 2, 0)); }),
            ErrorCode::ChannelMismatch);
}

TEST(AlphaBlend, EndpointsAreBitExact) {
  testing::Rng rng(43);
  const FeatureTensor content = testing::randomTensor(rng, 2, 4, 4);
  const FeatureTensor style = testing::randomTensor(rng, 2, 4, 4);
  const FeatureTensor styled = adain(content, style);
  EXPECT_EQ(alphaBlend(content, styled, 0.0), content);
  EXPECT_EQ(alphaBlend(content, styled, 1.0), styled);
  EXPECT_EQ(stylize(content, style, 0.0), content);
  EXPECT_EQ(stylize(content, style, 1.0), styled);
  const FeatureTensor half = alphaBlend(content, styled, 0.5);
  for (std::size_t k = 0; k < half.size(); ++k) {
    EXPECT_NEAR(half.data()[k], 0.5 * (content.data()[k] + styled.data()[k]), 1e-12);
  }
}

TEST(AlphaBlend, Errors) {
  const FeatureTensor a = FeatureTensor::filled(1, 2, 2, 0);
  EXPECT_EQ(codeOf([&] { alphaBlend(a, a, -0.1); }), ErrorCode::AlphaOutOfRange);
  EXPECT_EQ(codeOf([&] { alphaBlend(a, a, 1.1); }), ErrorCode::AlphaOutOfRange);
  EXPECT_EQ(codeOf([&] { alphaBlend(a, FeatureTensor::filled(1, 1, 4, 0), 0.5); }),
            ErrorCode::ShapeMismatch);
}

TEST(SampleAlpha, FixedAndUniform) {
  StyleConfig cfg;
  cfg.alphaMode = FixedAlpha{0.25};
  EXPECT_EQ(sampleAlpha(cfg, 17), 0.25);
  cfg.alphaMode = UniformAlpha{};
  cfg.seed = 99;
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double a = sampleAlpha(cfg, i);
    ASSERT_GE(a, 0.0);
    ASSERT_LE(a, 1.0);
    sum += a;
  }
  EXPECT_GE(sum / n, 0.49);
  EXPECT_LE(sum / n, 0.51);
  EXPECT_EQ(sampleAlpha(cfg, 1234), sampleAlpha(cfg, 1234));
  StyleConfig other = cfg;
  other.seed = 100;
  EXPECT_NE(sampleAlpha(cfg, 5), sampleAlpha(other, 5));
}

TEST(StylePlan, DeterministicPerSeed) {
  StyleConfig cfg;
  cfg.alphaMode = UniformAlpha{};
  cfg.styleIds = {"s0", "s1", "s2"};
  cfg.seed = 7;
  const auto a = planStyledGroup(cfg, 50);
  EXPECT_EQ(a, planStyledGroup(cfg, 50));
  for (const auto& d : a) EXPECT_EQ(d.styleId, cfg.styleIds[d.styleIndex]);
  cfg.styleIds.clear();
  EXPECT_EQ(codeOf([&] { drawStyle(cfg, 0); }), ErrorCode::InvalidArgument);
}

TEST(Tensor, InvalidShapes) {
  EXPECT_EQ(codeOf([] { FeatureTensor(0, 2, 2, {}); }), ErrorCode::InvalidTensor);
  EXPECT_EQ(codeOf([] { FeatureTensor(1, 2, 2, {1, 2, 3}); }), ErrorCode::InvalidTensor);
  EXPECT_EQ(codeOf([] { FeatureTensor(1, 1, 1, {1}); }), ErrorCode::InvalidTensor);
}

TEST(TensorIo, RoundTripAndCorruption) {
  const FeatureTensor t(2, 1, 3, {1.5, -2.25, 0, 8, 16, 0.125});
  const std::string bytes = encodeTensor(t);
  EXPECT_EQ(decodeTensor(bytes), t);
  EXPECT_EQ(codeOf([&] { decodeTensor(bytes.substr(0, bytes.size() - 1)); }),
            ErrorCode::CorruptTensor);
  EXPECT_EQ(codeOf([&] { decodeTensor(bytes + "x"); }), ErrorCode::CorruptTensor);
  std::string bad = bytes;
  bad[0] = 'X';
  EXPECT_EQ(codeOf([&] { decodeTensor(bad); }), ErrorCode::CorruptTensor);
}

}  // namespace
}  // namespace poseforge
