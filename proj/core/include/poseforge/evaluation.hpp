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

// COCO-style matching and AP/AR aggregation for person boxes and poses.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poseforge/annotations.hpp"
#include "poseforge/dataset.hpp"
#include "poseforge/similarity.hpp"

namespace poseforge {

struct MatchConfig {
  // Strictly ascending, each in (0, 1].
  std::vector<double> thresholds;
  // Per image; lower-scored detections beyond this count are dropped.
  std::size_t maxDetections = 20;
  SimilarityKind metricKind = SimilarityKind::OKS;
  OksParams oksParams = OksParams::coco();

  // 0.50:0.05:0.95 with 20 detections per image.
  static MatchConfig keypoints();
  // 0.50:0.05:0.95 with 100 detections per image.
  static MatchConfig boxes();
  static MatchConfig forKind(SimilarityKind kind);

  // Throws InvalidConfig.
  void validate() const;
};

// The ten COCO thresholds, computed exactly as numpy.linspace(.5, .95, 10).
std::vector<double> cocoThresholds();

struct Match {
  std::int64_t predId = 0;
  std::optional<std::int64_t> gtId;

  friend bool operator==(const Match&, const Match&) = default;
};

// Greedy one-image matching. Predictions are visited by descending score
// (stable on input order); each takes the still-unmatched ground truth with
// the highest similarity >= threshold, preferring the lower gt id on ties.
// Results come back in visiting order. Throws MissingScore if a prediction
// has no score.
//
// For OKS, ground truth without labeled keypoints cannot be matched and a
// prediction without a pose scores 0 against everything.
std::vector<Match> matchGreedy(std::span<const PersonInstance> preds,
                               std::span<const PersonInstance> gts, double threshold,
                               SimilarityKind metricKind,
                               const OksParams& oksParams = OksParams::coco());

struct ThresholdResult {
  double threshold = 0.0;
  double ap = 0.0;
  double ar = 0.0;
};

// Interpolated precision sampled at the 101 recall points 0, 0.01, ..., 1.
struct PrCurve {
  double threshold = 0.0;
  std::vector<double> recall;
  std::vector<double> precision;
};

struct EvalReport {
  SimilarityKind metricKind = SimilarityKind::OKS;
  std::vector<ThresholdResult> perThreshold;
  double mAP = 0.0;
  double mAR = 0.0;
  std::vector<PrCurve> prCurves;
  std::size_t groundTruthCount = 0;
  std::size_t detectionCount = 0;
};

using ImageInstances = std::map<std::int64_t, std::vector<PersonInstance>>;

ImageInstances groupByImage(std::span<const PersonInstance> instances);

// Ground truth keyed by every image of the document, including images with
// no annotations (their detections still count as false positives).
ImageInstances groundTruthByImage(const AnnotationDocument& doc);

// Runs matching for every image and threshold, then aggregates: detections
// from all images are ordered by score, AP is the mean of the precision
// envelope at the 101 recall points, AR is the final recall.
//
// For OKS, ground truth without labeled keypoints is left out of the
// evaluation. Throws EmptyGroundTruth when no ground truth remains,
// UnknownImage when a prediction names an image absent from `gts`, and
// MissingScore for unscored predictions.
EvalReport evaluate(const ImageInstances& preds, const ImageInstances& gts,
                    const MatchConfig& cfg);

// One `threshold=... AP=... AR=...` line per threshold and a summary line.
std::string formatReportText(const EvalReport& report);
// Machine-readable mirror of EvalReport.
std::string formatReportJson(const EvalReport& report);

}  // namespace poseforge
