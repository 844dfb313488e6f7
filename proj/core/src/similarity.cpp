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
#include "poseforge/similarity.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "poseforge/error.hpp"

namespace poseforge {

std::string_view similarityKindName(SimilarityKind kind) {
  return kind == SimilarityKind::IoU ? "iou" : "oks";
}

const OksParams& OksParams::coco() {
  static const OksParams params = [] {
    constexpr std::array<double, kNumJoints> sigmas = {
        0.026, 0.025, 0.025, 0.035, 0.035, 0.079, 0.079, 0.072, 0.072,
        0.062, 0.062, 0.107, 0.107, 0.087, 0.087, 0.089, 0.089};
    OksParams p;
    for (std::size_t i = 0; i < kNumJoints; ++i) p.perJointK[i] = 2.0 * sigmas[i];
    return p;
  }();
  return params;
}

void OksParams::validate() const {
  for (std::size_t i = 0; i < kNumJoints; ++i) {
    if (!(std::isfinite(perJointK[i]) && perJointK[i] > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, fmt::format("k[{}] must be positive", i));
    }
  }
}

SimilarityScore iou(const BoundingBox& a, const BoundingBox& b) {
  const double iw = std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x);
  const double ih = std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y);
  const double inter = (iw > 0.0 && ih > 0.0) ? iw * ih : 0.0;
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0.0) return {0.0, SimilarityKind::IoU};
  return {std::clamp(inter / uni, 0.0, 1.0), SimilarityKind::IoU};
}

SimilarityScore oks(const PoseAnnotation& pred, const PoseAnnotation& gt, double gtArea,
                    const OksParams& params) {
  if (gt.numLabeled() == 0) {
    throw Error(ErrorCode::NoLabeledKeypoints, "ground-truth pose has no labeled keypoints");
  }
  if (!(gtArea > 0.0) || !std::isfinite(gtArea)) {
    throw Error(ErrorCode::NonPositiveArea, fmt::format("area {}", gtArea));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < kNumJoints; ++i) {
    const Keypoint& g = gt[i];
    if (!g.labeled()) continue;
    const double dx = pred[i].x - g.x;
    const double dy = pred[i].y - g.y;
    const double k = params.perJointK[i];
    sum += std::exp(-(dx * dx + dy * dy) / (2.0 * gtArea * k * k));
  }
  return {sum / static_cast<double>(gt.numLabeled()), SimilarityKind::OKS};
}

}  // namespace poseforge
