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
#include "poseforge/dataset.hpp"

#include <cmath>

#include <fmt/format.h>

#include "poseforge/error.hpp"

namespace poseforge {

PoseAnnotation::PoseAnnotation(const std::array<Keypoint, kNumJoints>& keypoints) {
  for (std::size_t j = 0; j < kNumJoints; ++j) {
    Keypoint kp = keypoints[j];
    if (!std::isfinite(kp.x) || !std::isfinite(kp.y)) {
      throw Error(ErrorCode::NonFiniteValue, fmt::format("joint {} has a non-finite coordinate", j));
    }
    if (kp.visibility == Visibility::NotLabeled) {
      kp.x = 0.0;
      kp.y = 0.0;
    } else {
      ++num_labeled_;
    }
    keypoints_[j] = kp;
  }
}

PoseAnnotation normalizePose(std::span<const double> raw) {
  if (raw.size() != kPoseValues) {
    throw Error(ErrorCode::WrongLength,
                fmt::format("expected {} keypoint values, got {}", kPoseValues, raw.size()));
  }
  std::array<Keypoint, kNumJoints> kps{};
  for (std::size_t j = 0; j < kNumJoints; ++j) {
    const double x = raw[3 * j];
    const double y = raw[3 * j + 1];
    const double v = raw[3 * j + 2];
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(v)) {
      throw Error(ErrorCode::NonFiniteValue, fmt::format("joint {} has a non-finite value", j));
    }
    if (v == 0.0) {
      kps[j].visibility = Visibility::NotLabeled;
    } else if (v == 1.0) {
      kps[j].visibility = Visibility::LabeledHidden;
    } else if (v == 2.0) {
      kps[j].visibility = Visibility::LabeledVisible;
    } else {
      throw Error(ErrorCode::InvalidVisibilityFlag,
                  fmt::format("joint {} has visibility flag {}", j, v));
    }
    kps[j].x = x;
    kps[j].y = y;
  }
  return PoseAnnotation(kps);
}

std::array<double, kPoseValues> encodePose(const PoseAnnotation& pose) {
  std::array<double, kPoseValues> out{};
  for (std::size_t j = 0; j < kNumJoints; ++j) {
    const Keypoint& kp = pose[j];
    out[3 * j] = kp.x;
    out[3 * j + 1] = kp.y;
    out[3 * j + 2] = static_cast<double>(static_cast<std::uint8_t>(kp.visibility));
  }
  return out;
}

bool BoundingBox::valid() const {
  return std::isfinite(x) && std::isfinite(y) && std::isfinite(w) && std::isfinite(h) &&
         w >= 0.0 && h >= 0.0;
}

void StyleConfig::validate() const {
  if (const auto* fixed = std::get_if<FixedAlpha>(&alphaMode)) {
    if (!(fixed->value >= 0.0 && fixed->value <= 1.0)) {
      throw Error(ErrorCode::AlphaOutOfRange, fmt::format("alpha {} outside [0, 1]", fixed->value));
    }
  }
}

std::string_view styleSetName(StyleSetKind kind) {
  return kind == StyleSetKind::RB ? "RB" : "CA";
}

std::vector<StyleConfig> styledDatasetGroups(std::uint64_t seed) {
  std::vector<StyleConfig> groups;
  for (StyleSetKind set : {StyleSetKind::RB, StyleSetKind::CA}) {
    for (AlphaMode mode : {AlphaMode{FixedAlpha{0.5}}, AlphaMode{UniformAlpha{}}}) {
      StyleConfig cfg;
      cfg.alphaMode = mode;
      cfg.styleSet = set;
      cfg.seed = seed;
      groups.push_back(std::move(cfg));
    }
  }
  return groups;
}

}  // namespace poseforge
