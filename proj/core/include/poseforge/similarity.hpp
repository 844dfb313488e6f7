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

#include <array>

#include "poseforge/dataset.hpp"

namespace poseforge {

enum class SimilarityKind { IoU, OKS };

std::string_view similarityKindName(SimilarityKind kind);

struct SimilarityScore {
  double value = 0.0;  // in [0, 1]
  SimilarityKind kind = SimilarityKind::OKS;

  friend bool operator==(const SimilarityScore&, const SimilarityScore&) = default;
};

// Per-joint falloff constants k_i = 2 * sigma_i. Only ground-truth labeling
// gates which joints contribute; prediction visibility flags are ignored.
struct OksParams {
  std::array<double, kNumJoints> perJointK{};

  // The 17 COCO person sigmas, doubled.
  static const OksParams& coco();
  // Throws InvalidArgument unless every k_i is finite and positive.
  void validate() const;
};

// Intersection over union of two axis-aligned boxes; 0 when the union is
// empty.
SimilarityScore iou(const BoundingBox& a, const BoundingBox& b);

// Object keypoint similarity of `pred` against `gt`:
//
//   (1/|L|) * sum_{i in L} exp(-d_i^2 / (2 * gtArea * k_i^2))
//
// where L holds the joints labeled in `gt` and d_i is the Euclidean distance
// between the two joint positions. Throws NoLabeledKeypoints when L is
// empty and NonPositiveArea when gtArea <= 0.
SimilarityScore oks(const PoseAnnotation& pred, const PoseAnnotation& gt, double gtArea,
                    const OksParams& params = OksParams::coco());

}  // namespace poseforge
