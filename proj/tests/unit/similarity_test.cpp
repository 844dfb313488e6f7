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

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "poseforge/error.hpp"
#include "poseforge/similarity.hpp"

namespace poseforge {
namespace {

using testing::RawPose;

RawPose singleJoint(double x, double y) {
  RawPose raw{};
  raw[0] = x;
  raw[1] = y;
  raw[2] = 2;
  return raw;
}

TEST(Iou, HandCases) {
  EXPECT_DOUBLE_EQ(iou({0, 0, 10, 10}, {0, 0, 10, 10}).value, 1.0);
  EXPECT_DOUBLE_EQ(iou({0, 0, 10, 10}, {20, 20, 5, 5}).value, 0.0);
  EXPECT_DOUBLE_EQ(iou({0, 0, 10, 10}, {5, 0, 10, 10}).value, 50.0 / 150.0);
  EXPECT_DOUBLE_EQ(iou({0, 0, 10, 10}, {10, 0, 10, 10}).value, 0.0);
  EXPECT_EQ(iou({0, 0, 10, 10}, {5, 0, 10, 10}).kind, SimilarityKind::IoU);
}

TEST(Iou, MatchesPixelRaster) {
  testing::Rng rng(5);
  std::uniform_int_distribution<int> pos(0, 30), ext(1, 20);
  for (int i = 0; i < 500; ++i) {
    const int ax = pos(rng), ay = pos(rng), aw = ext(rng), ah = ext(rng);
    const int bx = pos(rng), by = pos(rng), bw = ext(rng), bh = ext(rng);
    const double got = iou({double(ax), double(ay), double(aw), double(ah)},
                           {double(bx), double(by), double(bw), double(bh)})
                           .value;
    EXPECT_NEAR(got, testing::rasterIou(ax, ay, aw, ah, bx, by, bw, bh), 1e-12);
  }
}

TEST(Iou, Symmetric) {
  testing::Rng rng(6);
  std::uniform_real_distribution<double> u(0, 50);
  for (int i = 0; i < 200; ++i) {
    const BoundingBox a{u(rng), u(rng), u(rng) + 1, u(rng) + 1};
    const BoundingBox b{u(rng), u(rng), u(rng) + 1, u(rng) + 1};
    EXPECT_EQ(iou(a, b).value, iou(b, a).value);
  }
}

TEST(Oks, SingleJointClosedForm) {
  const PoseAnnotation gt = normalizePose(singleJoint(100, 100));
  const PoseAnnotation pred = normalizePose(singleJoint(105.2, 100));
  EXPECT_NEAR(oks(pred, gt, 10000).value, std::exp(-0.5), 1e-9);
}

TEST(Oks, TwoJointHandSum) {
  RawPose g = singleJoint(100, 100);
  g[3] = 50;
  g[4] = 50;
  g[5] = 2;
  RawPose p = g;
  p[0] = 105.2;
  EXPECT_NEAR(oks(normalizePose(p), normalizePose(g), 10000).value, (1 + std::exp(-0.5)) / 2,
              1e-9);
}

TEST(Oks, SelfSimilarityIsExactlyOne) {
  testing::Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const PoseAnnotation p = normalizePose(testing::randomRawPose(rng, 0, 0, 200, 300));
    EXPECT_EQ(oks(p, p, 5000).value, 1.0);
  }
}

TEST(Oks, MatchesScalarOracle) {
  testing::Rng rng(9);
  std::uniform_real_distribution<double> area(100, 50000);
  for (int i = 0; i < 1000; ++i) {
    const RawPose g = testing::randomRawPose(rng, 0, 0, 200, 300, 0.6);
    const RawPose p = testing::randomRawPose(rng, 0, 0, 200, 300, 0.6);
    const double a = area(rng);
    const double got = oks(normalizePose(p), normalizePose(g), a).value;
    EXPECT_NEAR(got, testing::scalarOks(p, g, a), 1e-12);
    EXPECT_GE(got, 0.0);
    EXPECT_LE(got, 1.0);
  }
}

TEST(Oks, OnlyGroundTruthLabelsCount) {
  RawPose g = singleJoint(10, 10);
  RawPose p = singleJoint(10, 10);
  p[3] = 999;  // joint 1 labeled only in the prediction
  p[4] = 999;
  p[5] = 2;
  EXPECT_EQ(oks(normalizePose(p), normalizePose(g), 100).value, 1.0);
}

TEST(Oks, Errors) {
  const PoseAnnotation p = normalizePose(singleJoint(1, 1));
  try {
    oks(p, PoseAnnotation{}, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoLabeledKeypoints);
  }
  try {
    oks(p, p, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveArea);
  }
}

TEST(Oks, TranslationAndScaleInvariance) {
  testing::Rng rng(10);
  std::uniform_real_distribution<double> shift(-500, 500), scale(0.25, 4.0);
  for (int i = 0; i < 1000; ++i) {
    RawPose g = testing::randomRawPose(rng, 0, 0, 200, 300, 0.7);
    RawPose p = g;
    for (int j = 0; j < 17; ++j) {
      if (g[3 * j + 2] == 0) continue;
      p[3 * j] += std::normal_distribution<double>(0, 8)(rng);
      p[3 * j + 1] += std::normal_distribution<double>(0, 8)(rng);
    }
    const double area = 6000;
    const double base = oks(normalizePose(p), normalizePose(g), area).value;
    const double dx = shift(rng), dy = shift(rng), s = scale(rng);
    RawPose gt2 = g, pt2 = p, gs = g, ps = p;
    for (int j = 0; j < 17; ++j) {
      if (g[3 * j + 2] == 0) continue;
      gt2[3 * j] += dx;
      gt2[3 * j + 1] += dy;
      pt2[3 * j] += dx;
      pt2[3 * j + 1] += dy;
      gs[3 * j] *= s;
      gs[3 * j + 1] *= s;
      ps[3 * j] *= s;
      ps[3 * j + 1] *= s;
    }
    for (int j = 0; j < 17; ++j) {
      if (p[3 * j + 2] != 0 && g[3 * j + 2] == 0) {
        pt2[3 * j] += dx;
        pt2[3 * j + 1] += dy;
        ps[3 * j] *= s;
        ps[3 * j + 1] *= s;
      }
    }
    EXPECT_NEAR(oks(normalizePose(pt2), normalizePose(gt2), area).value, base, 1e-9);
    EXPECT_NEAR(oks(normalizePose(ps), normalizePose(gs), area * s * s).value, base, 1e-9);
  }
}

}  // namespace
}  // namespace poseforge
