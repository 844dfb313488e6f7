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
#include "poseforge/labels.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "poseforge/error.hpp"
#include "poseforge/keyvalue.hpp"

namespace poseforge {

namespace {

std::vector<std::string> parseList(std::string_view value) {
  std::vector<std::string> out;
  for (std::string_view item : splitFields(value, ',')) {
    item = trim(item);
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

void checkDistinct(const std::vector<std::string>& names, std::string_view what) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorCode::MalformedRecord, fmt::format("empty {} name", what));
    if (!seen.insert(n).second) {
      throw Error(ErrorCode::MalformedRecord, fmt::format("{} '{}' listed twice", what, n));
    }
  }
}

}  // namespace

bool Vocabulary::hasCharacter(std::string_view name) const {
  return std::find(characters.begin(), characters.end(), name) != characters.end();
}

bool Vocabulary::hasScene(std::string_view name) const {
  return std::find(scenes.begin(), scenes.end(), name) != scenes.end();
}

void Vocabulary::validate() const {
  if (characters.size() > kMaxCharacters) {
    throw Error(ErrorCode::VocabularyOverflow,
                fmt::format("{} characters, at most {} allowed", characters.size(), kMaxCharacters));
  }
  if (scenes.size() > kMaxScenes) {
    throw Error(ErrorCode::VocabularyOverflow,
                fmt::format("{} scenes, at most {} allowed", scenes.size(), kMaxScenes));
  }
  checkDistinct(characters, "character");
  checkDistinct(scenes, "scene");
}

Vocabulary Vocabulary::parse(std::string_view text) {
  const auto kv = parseKeyValue(text);
  Vocabulary v;
  for (const auto& [key, value] : kv) {
    if (key == "characters") {
      v.characters = parseList(value);
    } else if (key == "scenes") {
      v.scenes = parseList(value);
    } else {
      throw Error(ErrorCode::MalformedRecord, fmt::format("unknown vocabulary key '{}'", key));
    }
  }
  v.validate();
  return v;
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) { return parse(readFile(path)); }

LabelMap parseRetrievalLabels(std::string_view text, const std::optional<Vocabulary>& vocabulary) {
  LabelMap labels;
  std::set<std::string> characters;
  std::set<std::string> scenes;
  bool headerSeen = false;
  std::size_t lineNo = 0;
  for (std::string_view line : splitLines(text)) {
    ++lineNo;
    if (trim(line).empty()) continue;
    auto fields = splitFields(line, ',');
    for (auto& f : fields) f = trim(f);
    if (!headerSeen) {
      if (fields.size() != 3 || fields[0] != "person_id" || fields[1] != "character" ||
          fields[2] != "scene") {
        throw Error(ErrorCode::MalformedRecord,
                    "expected header 'person_id,character,scene'");
      }
      headerSeen = true;
      continue;
    }
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty() || fields[2].empty()) {
      throw Error(ErrorCode::MalformedRecord,
                  fmt::format("line {}: expected person_id,character,scene", lineNo));
    }
    const std::string id(fields[0]);
    RetrievalLabel label{std::string(fields[1]), std::string(fields[2])};
    if (vocabulary) {
      if (!vocabulary->hasCharacter(label.character)) {
        throw Error(ErrorCode::UnknownCharacter,
                    fmt::format("line {}: '{}'", lineNo, label.character));
      }
      if (!vocabulary->hasScene(label.scene)) {
        throw Error(ErrorCode::UnknownScene, fmt::format("line {}: '{}'", lineNo, label.scene));
      }
    }
    characters.insert(label.character);
    scenes.insert(label.scene);
    if (!labels.emplace(id, std::move(label)).second) {
      throw Error(ErrorCode::DuplicatePersonId, fmt::format("line {}: '{}'", lineNo, id));
    }
  }
  if (!headerSeen) {
    throw Error(ErrorCode::MalformedRecord, "missing header 'person_id,character,scene'");
  }
  if (characters.size() > kMaxCharacters) {
    throw Error(ErrorCode::VocabularyOverflow,
                fmt::format("{} distinct characters, at most {}", characters.size(), kMaxCharacters));
  }
  if (scenes.size() > kMaxScenes) {
    throw Error(ErrorCode::VocabularyOverflow,
                fmt::format("{} distinct scenes, at most {}", scenes.size(), kMaxScenes));
  }
  return labels;
}

std::string writeRetrievalLabels(const LabelMap& labels) {
  std::string out = "person_id,character,scene\n";
  for (const auto& [id, label] : labels) {
    out += fmt::format("{},{},{}\n", id, label.character, label.scene);
  }
  return out;
}

std::map<std::string, std::size_t> sceneHistogram(const LabelMap& labels) {
  std::map<std::string, std::size_t> hist;
  for (const auto& [id, label] : labels) ++hist[label.scene];
  return hist;
}

}  // namespace poseforge
