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

// Character / scene labels used by the pose retrieval experiments.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace poseforge {

inline constexpr std::size_t kMaxCharacters = 15;
inline constexpr std::size_t kMaxScenes = 5;

// Closed label sets, loaded from a key=value file:
//
//   characters = persecutor, fleeing, bride, ...
//   scenes = pursuit, leading_bride, ...
struct Vocabulary {
  std::vector<std::string> characters;
  std::vector<std::string> scenes;

  bool hasCharacter(std::string_view name) const;
  bool hasScene(std::string_view name) const;

  // Throws VocabularyOverflow past 15 characters / 5 scenes,
  // MalformedRecord on empty or repeated names.
  void validate() const;

  static Vocabulary parse(std::string_view text);
  static Vocabulary load(const std::filesystem::path& path);
};

struct RetrievalLabel {
  std::string character;
  std::string scene;

  friend bool operator==(const RetrievalLabel&, const RetrievalLabel&) = default;
};

using LabelMap = std::map<std::string, RetrievalLabel>;

// Reads `person_id,character,scene` records after a header line of exactly
// those names. With a vocabulary, unknown names raise UnknownCharacter /
// UnknownScene; without one, the distinct-name limits are still enforced
// (VocabularyOverflow). Repeated ids raise DuplicatePersonId, malformed
// lines MalformedRecord.
LabelMap parseRetrievalLabels(std::string_view text,
                              const std::optional<Vocabulary>& vocabulary = std::nullopt);

std::string writeRetrievalLabels(const LabelMap& labels);

// Count of records per scene, in scene-name order.
std::map<std::string, std::size_t> sceneHistogram(const LabelMap& labels);

}  // namespace poseforge
