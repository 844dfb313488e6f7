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

// COCO-style keypoint annotation files: parsing, validation, writing and
// split accounting.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "poseforge/dataset.hpp"
#include "poseforge/manifest.hpp"

namespace poseforge {

struct ImageHeader {
  std::int64_t id = 0;
  int width = 0;
  int height = 0;
  std::string fileName;
  // Fields this library does not interpret, kept for round-tripping.
  nlohmann::json extra = nlohmann::json::object();

  friend bool operator==(const ImageHeader&, const ImageHeader&) = default;
};

struct PersonCategory {
  std::int64_t id = 1;
  std::string name = "person";
  std::vector<std::string> keypointNames;
  // 1-based joint index pairs.
  std::vector<std::pair<int, int>> skeleton;
  nlohmann::json extra = nlohmann::json::object();

  friend bool operator==(const PersonCategory&, const PersonCategory&) = default;
};

// Default person category with COCO joint names and skeleton.
PersonCategory cocoPersonCategory();

struct AnnotationRecord {
  std::int64_t id = 0;
  std::int64_t imageId = 0;
  std::int64_t categoryId = 1;
  BoundingBox bbox;
  double area = 0.0;
  // Absent when the record has no `keypoints` field.
  std::optional<PoseAnnotation> pose;
  std::optional<double> score;
  nlohmann::json extra = nlohmann::json::object();

  PersonInstance toInstance() const;
  friend bool operator==(const AnnotationRecord&, const AnnotationRecord&) = default;
};

struct AnnotationDocument {
  std::vector<ImageHeader> images;
  std::vector<AnnotationRecord> annotations;
  std::vector<PersonCategory> categories;
  // Unknown top-level members such as `info` or `licenses`.
  nlohmann::json extra = nlohmann::json::object();

  const ImageHeader* findImage(std::int64_t id) const;
  std::vector<PersonInstance> instances() const;
  friend bool operator==(const AnnotationDocument&, const AnnotationDocument&) = default;
};

// Parses a COCO keypoint annotation document. Unlabeled keypoints are
// canonicalized, missing areas default to the box area, and cross
// references are checked.
//
// Every failure is an Error with one of: SyntaxError (detail carries the
// byte offset), DanglingImageReference, DuplicateId, SchemaViolation
// (detail carries the offending field path).
AnnotationDocument parseAnnotations(std::string_view bytes);
AnnotationDocument loadAnnotations(const std::filesystem::path& path);

// Deterministic serialization; parseAnnotations(writeAnnotations(d)) == d.
std::string writeAnnotations(const AnnotationDocument& doc);

// Reads detections either from a COCO results array
// (`[{image_id, keypoints|bbox, score}, ...]`) or from a full annotation
// document whose records carry scores. Same error categories as
// parseAnnotations.
std::vector<PersonInstance> parsePredictions(std::string_view bytes);

struct KeypointFlag {
  std::int64_t annotationId = 0;
  std::size_t joint = 0;
};

// Labeled keypoints that fall outside their image's [0, width] x [0, height].
std::vector<KeypointFlag> outOfBoundsKeypoints(const AnnotationDocument& doc);

struct SplitCounts {
  std::uint64_t images = 0;
  std::uint64_t persons = 0;
  // Persons with at least one labeled keypoint.
  std::uint64_t poses = 0;
};

SplitCounts countSplit(const AnnotationDocument& doc);
DatasetManifest manifestFor(DatasetName name, Split split, const AnnotationDocument& doc);

}  // namespace poseforge
