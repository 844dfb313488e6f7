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
#pragma once

// Task losses and the two perceptual-consistency combinations:
//
//   comb1 = L_T + L_T * L_percept
//   comb2 = lambda1 * L_T + lambda2 * L_percept
//
// All functions are pure scalar arithmetic over caller-supplied values.

#include <span>

#include "poseforge/tensor.hpp"

namespace poseforge {

enum class TaskKind { Detection, Pose };

struct LossWeights {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  TaskKind task = TaskKind::Detection;

  // lambda1 = 0.43, lambda2 = 0.92 (found by hyperparameter search).
  static LossWeights detection();
  // lambda1 = 0.47, lambda2 = 0.018.
  static LossWeights pose();
  static LossWeights forTask(TaskKind task);

  // Throws InvalidWeights on negative / non-finite weights or both zero.
  void validate() const;
};

// Reference optimizer schedules, kept as documentation for a downstream
// training harness. Nothing in this library trains.
struct TrainingSchedule {
  double initialLearningRate;
  int plateauPatience;  // epochs
  double plateauFactor;
  int batchSize;
  int epochs;

  static TrainingSchedule detector();
  static TrainingSchedule poseEstimator();
};

// Mean squared error over all elements. Throws ShapeMismatch.
double poseLoss(const FeatureTensor& predHeatmaps, const FeatureTensor& gtHeatmaps);

// cls + reg. Throws NegativeComponent.
double detectionLoss(double cls, double reg);

// Weighted mean over layers of the per-layer MSE. Empty `layerWeights`
// means uniform. Throws LengthMismatch, ShapeMismatch, or InvalidWeights
// (negative weights, all-zero weights, wrong count).
double perceptualLoss(std::span<const FeatureTensor> featsA, std::span<const FeatureTensor> featsB,
                      std::span<const double> layerWeights = {});

// Throws NegativeInput.
double combinedLoss1(double taskLoss, double perceptual);
double combinedLoss2(double taskLoss, double perceptual, const LossWeights& w);

}  // namespace poseforge
