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
#include "poseforge/annotations.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "poseforge/error.hpp"
#include "poseforge/keyvalue.hpp"

namespace poseforge {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& path, std::string_view what) {
  throw Error(ErrorCode::SchemaViolation, fmt::format("{}: {}", path, what));
}

const json& member(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(path + "." + key, "missing");
  return *it;
}

std::int64_t asInt64(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      schema(path, "integer out of range");
    }
    return static_cast<std::int64_t>(u);
  }
  if (v.is_number_integer()) return v.get<std::int64_t>();
  schema(path, "expected an integer");
}

double asReal(const json& v, const std::string& path) {
  if (!v.is_number()) schema(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) schema(path, "non-finite number");
  return d;
}

int asPositiveInt(const json& v, const std::string& path) {
  const std::int64_t i = asInt64(v, path);
  if (i <= 0 || i > std::numeric_limits<int>::max()) schema(path, "expected a positive integer");
  return static_cast<int>(i);
}

std::string asString(const json& v, const std::string& path) {
  if (!v.is_string()) schema(path, "expected a string");
  return v.get<std::string>();
}

const json& asArray(const json& v, const std::string& path) {
  if (!v.is_array()) schema(path, "expected an array");
  return v;
}

json extrasOf(const json& obj, std::initializer_list<const char*> known) {
  json extra = json::object();
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool isKnown = false;
    for (const char* k : known) {
      if (it.key() == k) {
        isKnown = true;
        break;
      }
    }
    if (!isKnown) extra[it.key()] = it.value();
  }
  return extra;
}

BoundingBox parseBox(const json& v, const std::string& path) {
  asArray(v, path);
  if (v.size() != 4) schema(path, "expected [x, y, w, h]");
  BoundingBox box{asReal(v[0], path + "[0]"), asReal(v[1], path + "[1]"),
                  asReal(v[2], path + "[2]"), asReal(v[3], path + "[3]")};
  if (!box.valid()) schema(path, "negative width or height");
  return box;
}

PoseAnnotation parseKeypoints(const json& v, const std::string& path) {
  asArray(v, path);
  if (v.size() != kPoseValues) {
    schema(path, fmt::format("expected {} numbers, got {}", kPoseValues, v.size()));
  }
  std::array<double, kPoseValues> raw{};
  for (std::size_t i = 0; i < kPoseValues; ++i) {
    raw[i] = asReal(v[i], fmt::format("{}[{}]", path, i));
  }
  try {
    return normalizePose(raw);
  } catch (const Error& e) {
    schema(path, e.detail());
  }
}

double parseScore(const json& v, const std::string& path) {
  const double s = asReal(v, path);
  if (s < 0.0 || s > 1.0) schema(path, "score outside [0, 1]");
  return s;
}

ImageHeader parseImage(const json& v, const std::string& path) {
  if (!v.is_object()) schema(path, "expected an object");
  ImageHeader img;
  img.id = asInt64(member(v, "id", path), path + ".id");
  img.width = asPositiveInt(member(v, "width", path), path + ".width");
  img.height = asPositiveInt(member(v, "height", path), path + ".height");
  if (auto it = v.find("file_name"); it != v.end()) {
    img.fileName = asString(*it, path + ".file_name");
  }
  img.extra = extrasOf(v, {"id", "width", "height", "file_name"});
  return img;
}

AnnotationRecord parseRecord(const json& v, const std::string& path) {
  if (!v.is_object()) schema(path, "expected an object");
  AnnotationRecord rec;
  rec.id = asInt64(member(v, "id", path), path + ".id");
  rec.imageId = asInt64(member(v, "image_id", path), path + ".image_id");
  if (auto it = v.find("category_id"); it != v.end()) {
    rec.categoryId = asInt64(*it, path + ".category_id");
  }
  rec.bbox = parseBox(member(v, "bbox", path), path + ".bbox");
  if (auto it = v.find("area"); it != v.end()) {
    rec.area = asReal(*it, path + ".area");
    if (rec.area < 0.0) schema(path + ".area", "negative area");
  } else {
    rec.area = rec.bbox.area();
  }
  if (auto it = v.find("keypoints"); it != v.end()) {
    rec.pose = parseKeypoints(*it, path + ".keypoints");
  }
  if (auto it = v.find("num_keypoints"); it != v.end()) {
    const std::int64_t n = asInt64(*it, path + ".num_keypoints");
    const std::int64_t actual = rec.pose ? static_cast<std::int64_t>(rec.pose->numLabeled()) : 0;
    if (n != actual) {
      schema(path + ".num_keypoints",
             fmt::format("declares {} labeled keypoints, found {}", n, actual));
    }
  }
  if (auto it = v.find("score"); it != v.end()) {
    rec.score = parseScore(*it, path + ".score");
  }
  rec.extra = extrasOf(
      v, {"id", "image_id", "category_id", "bbox", "area", "keypoints", "num_keypoints", "score"});
  return rec;
}

PersonCategory parseCategory(const json& v, const std::string& path) {
  if (!v.is_object()) schema(path, "expected an object");
  PersonCategory cat;
  cat.id = asInt64(member(v, "id", path), path + ".id");
  cat.name = asString(member(v, "name", path), path + ".name");
  cat.keypointNames.clear();
  if (auto it = v.find("keypoints"); it != v.end()) {
    asArray(*it, path + ".keypoints");
    if (it->size() != kNumJoints) {
      schema(path + ".keypoints", fmt::format("expected {} joint names", kNumJoints));
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      cat.keypointNames.push_back(asString((*it)[i], fmt::format("{}.keypoints[{}]", path, i)));
    }
  }
  if (auto it = v.find("skeleton"); it != v.end()) {
    asArray(*it, path + ".skeleton");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string ep = fmt::format("{}.skeleton[{}]", path, i);
      const json& edge = asArray((*it)[i], ep);
      if (edge.size() != 2) schema(ep, "expected a joint pair");
      const std::int64_t a = asInt64(edge[0], ep + "[0]");
      const std::int64_t b = asInt64(edge[1], ep + "[1]");
      const auto inRange = [](std::int64_t j) {
        return j >= 1 && j <= static_cast<std::int64_t>(kNumJoints);
      };
      if (!inRange(a) || !inRange(b)) schema(ep, "joint index outside 1..17");
      cat.skeleton.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  cat.extra = extrasOf(v, {"id", "name", "keypoints", "skeleton"});
  return cat;
}

json parseJson(std::string_view bytes) {
  try {
    return json::parse(bytes.data(), bytes.data() + bytes.size());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, fmt::format("byte {}: {}", e.byte, e.what()));
  } catch (const json::exception& e) {
    // number overflow and similar lexical failures
    throw Error(ErrorCode::SyntaxError, e.what());
  }
}

AnnotationDocument documentFromJson(const json& root) {
  if (!root.is_object()) schema("$", "expected an object");
  AnnotationDocument doc;

  const json& images = asArray(member(root, "images", "$"), "$.images");
  std::unordered_set<std::int64_t> imageIds;
  for (std::size_t i = 0; i < images.size(); ++i) {
    ImageHeader img = parseImage(images[i], fmt::format("$.images[{}]", i));
    if (!imageIds.insert(img.id).second) {
      throw Error(ErrorCode::DuplicateId, fmt::format("image id {}", img.id));
    }
    doc.images.push_back(std::move(img));
  }

  const json& anns = asArray(member(root, "annotations", "$"), "$.annotations");
  std::unordered_set<std::int64_t> annIds;
  for (std::size_t i = 0; i < anns.size(); ++i) {
    AnnotationRecord rec = parseRecord(anns[i], fmt::format("$.annotations[{}]", i));
    if (!annIds.insert(rec.id).second) {
      throw Error(ErrorCode::DuplicateId, fmt::format("annotation id {}", rec.id));
    }
    if (!imageIds.contains(rec.imageId)) {
      throw Error(ErrorCode::DanglingImageReference,
                  fmt::format("annotation {} references missing image {}", rec.id, rec.imageId));
    }
    doc.annotations.push_back(std::move(rec));
  }

  if (auto it = root.find("categories"); it != root.end()) {
    asArray(*it, "$.categories");
    std::unordered_set<std::int64_t> catIds;
    for (std::size_t i = 0; i < it->size(); ++i) {
      PersonCategory cat = parseCategory((*it)[i], fmt::format("$.categories[{}]", i));
      if (!catIds.insert(cat.id).second) {
        throw Error(ErrorCode::DuplicateId, fmt::format("category id {}", cat.id));
      }
      doc.categories.push_back(std::move(cat));
    }
  }

  doc.extra = extrasOf(root, {"images", "annotations", "categories"});
  return doc;
}

}  // namespace

PersonCategory cocoPersonCategory() {
  PersonCategory cat;
  cat.id = 1;
  cat.name = "person";
  for (const char* name : kJointNames) cat.keypointNames.emplace_back(name);
  cat.skeleton.assign(kCocoSkeleton.begin(), kCocoSkeleton.end());
  cat.extra = json{{"supercategory", "person"}};
  return cat;
}

PersonInstance AnnotationRecord::toInstance() const {
  PersonInstance p;
  p.id = id;
  p.imageId = imageId;
  p.box = bbox;
  p.pose = pose;
  p.area = area;
  p.score = score;
  return p;
}

const ImageHeader* AnnotationDocument::findImage(std::int64_t id) const {
  for (const auto& img : images) {
    if (img.id == id) return &img;
  }
  return nullptr;
}

std::vector<PersonInstance> AnnotationDocument::instances() const {
  std::vector<PersonInstance> out;
  out.reserve(annotations.size());
  for (const auto& rec : annotations) out.push_back(rec.toInstance());
  return out;
}

AnnotationDocument parseAnnotations(std::string_view bytes) {
  const json root = parseJson(bytes);
  try {
    return documentFromJson(root);
  } catch (const json::exception& e) {
    // Type checks above should make this unreachable.
    throw Error(ErrorCode::SchemaViolation, e.what());
  }
}

AnnotationDocument loadAnnotations(const std::filesystem::path& path) {
  return parseAnnotations(readFile(path));
}

std::string writeAnnotations(const AnnotationDocument& doc) {
  json root = doc.extra;
  json images = json::array();
  for (const auto& img : doc.images) {
    json j = img.extra;
    j["id"] = img.id;
    j["width"] = img.width;
    j["height"] = img.height;
    j["file_name"] = img.fileName;
    images.push_back(std::move(j));
  }
  json anns = json::array();
  for (const auto& rec : doc.annotations) {
    json j = rec.extra;
    j["id"] = rec.id;
    j["image_id"] = rec.imageId;
    j["category_id"] = rec.categoryId;
    j["bbox"] = {rec.bbox.x, rec.bbox.y, rec.bbox.w, rec.bbox.h};
    j["area"] = rec.area;
    if (rec.pose) {
      const auto raw = encodePose(*rec.pose);
      j["keypoints"] = raw;
      j["num_keypoints"] = rec.pose->numLabeled();
    }
    if (rec.score) j["score"] = *rec.score;
    anns.push_back(std::move(j));
  }
  json cats = json::array();
  for (const auto& cat : doc.categories) {
    json j = cat.extra;
    j["id"] = cat.id;
    j["name"] = cat.name;
    if (!cat.keypointNames.empty()) j["keypoints"] = cat.keypointNames;
    json edges = json::array();
    for (const auto& [a, b] : cat.skeleton) edges.push_back({a, b});
    if (!cat.skeleton.empty()) j["skeleton"] = std::move(edges);
    cats.push_back(std::move(j));
  }
  root["images"] = std::move(images);
  root["annotations"] = std::move(anns);
  if (!doc.categories.empty()) root["categories"] = std::move(cats);
  return root.dump() + "\n";
}

std::vector<PersonInstance> parsePredictions(std::string_view bytes) {
  const json root = parseJson(bytes);
  if (root.is_object()) {
    try {
      return documentFromJson(root).instances();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::SchemaViolation, e.what());
    }
  }
  if (!root.is_array()) schema("$", "expected a results array or an annotation document");

  std::vector<PersonInstance> out;
  std::unordered_set<std::int64_t> ids;
  try {
    for (std::size_t i = 0; i < root.size(); ++i) {
      const std::string path = fmt::format("$[{}]", i);
      const json& v = root[i];
      if (!v.is_object()) schema(path, "expected an object");
      PersonInstance p;
      p.id = static_cast<std::int64_t>(i) + 1;
      if (auto it = v.find("id"); it != v.end()) p.id = asInt64(*it, path + ".id");
      if (!ids.insert(p.id).second) {
        throw Error(ErrorCode::DuplicateId, fmt::format("detection id {}", p.id));
      }
      p.imageId = asInt64(member(v, "image_id", path), path + ".image_id");
      p.score = parseScore(member(v, "score", path), path + ".score");
      if (auto it = v.find("keypoints"); it != v.end()) {
        p.pose = parseKeypoints(*it, path + ".keypoints");
      }
      if (auto it = v.find("bbox"); it != v.end()) {
        p.box = parseBox(*it, path + ".bbox");
      } else if (p.hasLabeledPose()) {
        double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
        double x1 = -x0, y1 = -x0;
        for (const Keypoint& kp : p.pose->keypoints()) {
          if (!kp.labeled()) continue;
          x0 = std::min(x0, kp.x);
          x1 = std::max(x1, kp.x);
          y0 = std::min(y0, kp.y);
          y1 = std::max(y1, kp.y);
        }
        p.box = BoundingBox{x0, y0, x1 - x0, y1 - y0};
      } else if (!p.pose) {
        schema(path, "detection needs keypoints or bbox");
      }
      p.area = p.box.area();
      if (auto it = v.find("area"); it != v.end()) p.area = asReal(*it, path + ".area");
      out.push_back(std::move(p));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaViolation, e.what());
  }
  return out;
}

std::vector<KeypointFlag> outOfBoundsKeypoints(const AnnotationDocument& doc) {
  std::unordered_map<std::int64_t, const ImageHeader*> byId;
  for (const auto& img : doc.images) byId.emplace(img.id, &img);
  std::vector<KeypointFlag> flags;
  for (const auto& rec : doc.annotations) {
    if (!rec.pose) continue;
    auto it = byId.find(rec.imageId);
    if (it == byId.end()) continue;
    const ImageHeader& img = *it->second;
    for (std::size_t j = 0; j < kNumJoints; ++j) {
      const Keypoint& kp = (*rec.pose)[j];
      if (!kp.labeled()) continue;
      if (kp.x < 0.0 || kp.y < 0.0 || kp.x > img.width || kp.y > img.height) {
        flags.push_back({rec.id, j});
      }
    }
  }
  return flags;
}

SplitCounts countSplit(const AnnotationDocument& doc) {
  SplitCounts c;
  c.images = doc.images.size();
  c.persons = doc.annotations.size();
  for (const auto& rec : doc.annotations) {
    if (rec.pose && rec.pose->numLabeled() > 0) ++c.poses;
  }
  return c;
}

DatasetManifest manifestFor(DatasetName name, Split split, const AnnotationDocument& doc) {
  const SplitCounts c = countSplit(doc);
  return DatasetManifest{name, split, c.images, c.persons, c.poses};
}

}  // namespace poseforge
