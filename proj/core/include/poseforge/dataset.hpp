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

// Domain types shared by every module: keypoints, poses, boxes, persons,
// images and the styling configuration used to synthesize styled datasets.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace poseforge {

inline constexpr std::size_t kNumJoints = 17;
inline constexpr std::size_t kPoseValues = 3 * kNumJoints;

// COCO joint order.
inline constexpr std::array<const char*, kNumJoints> kJointNames = {
    "nose",          "left_eye",       "right_eye",      "left_ear",
    "right_ear",     "left_shoulder",  "right_shoulder", "left_elbow",
    "right_elbow",   "left_wrist",     "right_wrist",    "left_hip",
    "right_hip",     "left_knee",      "right_knee",     "left_ankle",
    "right_ankle"};

// COCO person skeleton, 1-based joint indices as they appear in annotation
// files.
inline constexpr std::array<std::pair<int, int>, 19> kCocoSkeleton = {{
    {16, 14}, {14, 12}, {17, 15}, {15, 13}, {12, 13}, {6, 12}, {7, 13},
    {6, 7},   {6, 8},   {7, 9},   {8, 10},  {9, 11},  {2, 3},  {1, 2},
    {1, 3},   {2, 4},   {3, 5},   {4, 6},   {5, 7},
}};

// Flag values follow the COCO triplet encoding 0/1/2.
enum class Visibility : std::uint8_t {
  NotLabeled = 0,
  LabeledHidden = 1,
  LabeledVisible = 2,
};

struct Keypoint {
  double x = 0.0;
  double y = 0.0;
  Visibility visibility = Visibility::NotLabeled;

  bool labeled() const { return visibility != Visibility::NotLabeled; }
  friend bool operator==(const Keypoint&, const Keypoint&) = default;
};

// Seventeen keypoints in canonical form: unlabeled joints sit at (0, 0) and
// every coordinate is finite. Only normalizePose() and the constructor below
// produce instances, so the invariant holds for every live object.
class PoseAnnotation {
 public:
  // All joints unlabeled.
  PoseAnnotation() = default;
  // Validates finiteness and canonicalizes unlabeled joints.
  explicit PoseAnnotation(const std::array<Keypoint, kNumJoints>& keypoints);

  const std::array<Keypoint, kNumJoints>& keypoints() const { return keypoints_; }
  const Keypoint& operator[](std::size_t joint) const { return keypoints_[joint]; }
  std::size_t numLabeled() const { return num_labeled_; }

  friend bool operator==(const PoseAnnotation&, const PoseAnnotation&) = default;

 private:
  std::array<Keypoint, kNumJoints> keypoints_{};
  std::size_t num_labeled_ = 0;
};

// Maps 51 COCO triplet values (x, y, v) onto a canonical pose.
// Throws WrongLength, NonFiniteValue or InvalidVisibilityFlag.
PoseAnnotation normalizePose(std::span<const double> raw);

// Inverse of normalizePose for canonical input.
std::array<double, kPoseValues> encodePose(const PoseAnnotation& pose);

struct BoundingBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double area() const { return w * h; }
  bool valid() const;
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct PersonInstance {
  std::int64_t id = 0;
  std::int64_t imageId = 0;
  BoundingBox box;
  std::optional<PoseAnnotation> pose;
  // Segment area when the source provides one, otherwise box.w * box.h.
  double area = 0.0;
  // Present only on predictions.
  std::optional<double> score;

  bool hasLabeledPose() const { return pose && pose->numLabeled() > 0; }
  friend bool operator==(const PersonInstance&, const PersonInstance&) = default;
};

struct ImageRecord {
  std::int64_t imageId = 0;
  int width = 0;
  int height = 0;
  std::optional<std::string> sceneLabel;
  std::vector<std::pair<std::int64_t, std::string>> characterLabels;

  friend bool operator==(const ImageRecord&, const ImageRecord&) = default;
};

// Styling configuration for one styled-dataset group.

struct FixedAlpha {
  double value = 0.5;
  friend bool operator==(const FixedAlpha&, const FixedAlpha&) = default;
};
struct UniformAlpha {
  friend bool operator==(const UniformAlpha&, const UniformAlpha&) = default;
};
using AlphaMode = std::variant<FixedAlpha, UniformAlpha>;

enum class StyleSetKind { RB, CA };

struct StyleConfig {
  AlphaMode alphaMode = FixedAlpha{};
  StyleSetKind styleSet = StyleSetKind::CA;
  // Opaque references to the style images of the chosen set.
  std::vector<std::string> styleIds;
  std::uint64_t seed = 0;

  // Throws AlphaOutOfRange when a fixed alpha lies outside [0, 1].
  void validate() const;
  friend bool operator==(const StyleConfig&, const StyleConfig&) = default;
};

std::string_view styleSetName(StyleSetKind kind);

// The four styled-dataset groups: {alpha = 0.5, alpha ~ U[0,1]} x {RB, CA}.
std::vector<StyleConfig> styledDatasetGroups(std::uint64_t seed);

}  // namespace poseforge
