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
#include "poseforge/losses.hpp"

#include <cmath>

#include <fmt/format.h>

#include "poseforge/error.hpp"

namespace poseforge {

namespace {

void requireNonNegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::NegativeInput, fmt::format("{} = {}", name, v));
  }
}

}  // namespace

LossWeights LossWeights::detection() { return {0.43, 0.92, TaskKind::Detection}; }
LossWeights LossWeights::pose() { return {0.47, 0.018, TaskKind::Pose}; }
LossWeights LossWeights::forTask(TaskKind task) {
  return task == TaskKind::Detection ? detection() : pose();
}

void LossWeights::validate() const {
  const auto ok = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!ok(lambda1) || !ok(lambda2)) {
    throw Error(ErrorCode::InvalidWeights, fmt::format("lambda1={} lambda2={}", lambda1, lambda2));
  }
  if (lambda1 == 0.0 && lambda2 == 0.0) {
    throw Error(ErrorCode::InvalidWeights, "lambda1 and lambda2 are both zero");
  }
}

TrainingSchedule TrainingSchedule::detector() { return {1e-4, 3, 0.33, 8, 25}; }
TrainingSchedule TrainingSchedule::poseEstimator() { return {1e-2, 3, 0.1, 64, 100}; }

double poseLoss(const FeatureTensor& predHeatmaps, const FeatureTensor& gtHeatmaps) {
  if (!predHeatmaps.sameShape(gtHeatmaps)) {
    throw Error(ErrorCode::ShapeMismatch, "prediction and target heatmaps differ in shape");
  }
  const auto a = predHeatmaps.data();
  const auto b = gtHeatmaps.data();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

double detectionLoss(double cls, double reg) {
  if (!(cls >= 0.0) || !(reg >= 0.0)) {
    throw Error(ErrorCode::NegativeComponent, fmt::format("cls={} reg={}", cls, reg));
  }
  return cls + reg;
}

double perceptualLoss(std::span<const FeatureTensor> featsA, std::span<const FeatureTensor> featsB,
                      std::span<const double> layerWeights) {
  if (featsA.size() != featsB.size()) {
    throw Error(ErrorCode::LengthMismatch,
                fmt::format("{} layers vs {} layers", featsA.size(), featsB.size()));
  }
  if (featsA.empty()) throw Error(ErrorCode::LengthMismatch, "no feature layers");
  if (!layerWeights.empty() && layerWeights.size() != featsA.size()) {
    throw Error(ErrorCode::InvalidWeights,
                fmt::format("{} weights for {} layers", layerWeights.size(), featsA.size()));
  }
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t l = 0; l < featsA.size(); ++l) {
    const double w = layerWeights.empty() ? 1.0 : layerWeights[l];
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::InvalidWeights, fmt::format("layer {} weight {}", l, w));
    }
    weighted += w * poseLoss(featsA[l], featsB[l]);
    total += w;
  }
  if (total == 0.0) throw Error(ErrorCode::InvalidWeights, "all layer weights are zero");
  return weighted / total;
}

double combinedLoss1(double taskLoss, double perceptual) {
  requireNonNegative(taskLoss, "taskLoss");
  requireNonNegative(perceptual, "perceptual");
  return taskLoss + taskLoss * perceptual;
}

double combinedLoss2(double taskLoss, double perceptual, const LossWeights& w) {
  requireNonNegative(taskLoss, "taskLoss");
  requireNonNegative(perceptual, "perceptual");
  w.validate();
  return w.lambda1 * taskLoss + w.lambda2 * perceptual;
}

}  // namespace poseforge
