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
#include <map>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "poseforge/error.hpp"
#include "poseforge/keyvalue.hpp"
#include "poseforge/labels.hpp"

namespace poseforge {
namespace {

const std::string kData = POSEFORGE_TEST_DATA_DIR;

ErrorCode labelError(std::string_view text, const std::optional<Vocabulary>& vocab) {
  try {
    parseRetrievalLabels(text, vocab);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::InvalidArgument;
}

TEST(Vocabulary, ShippedFileHasFifteenCharactersFiveScenes) {
  const Vocabulary v = Vocabulary::load(POSEFORGE_VOCAB_FILE);
  EXPECT_EQ(v.characters.size(), 15u);
  EXPECT_EQ(v.scenes.size(), 5u);
  EXPECT_TRUE(v.hasCharacter("bride"));
  EXPECT_TRUE(v.hasScene("pursuit"));
  EXPECT_FALSE(v.hasScene("banquet"));
}

TEST(Vocabulary, Overflow) {
  try {
    Vocabulary::parse("characters=a\nscenes=a,b,c,d,e,f\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VocabularyOverflow);
  }
}

TEST(Labels, ValidationFixture) {
  const Vocabulary v = Vocabulary::load(POSEFORGE_VOCAB_FILE);
  const LabelMap labels = parseRetrievalLabels(readFile(kData + "/ca_val_labels.csv"), v);
  EXPECT_EQ(labels.size(), 303u);

  // one-pass count over the raw file
  std::map<std::string, std::size_t> expected;
  std::istringstream in(readFile(kData + "/ca_val_labels.csv"));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    expected[line.substr(line.rfind(',') + 1)]++;
  }
  const auto hist = sceneHistogram(labels);
  EXPECT_EQ(hist, expected);
  std::size_t total = 0;
  for (const auto& [scene, n] : hist) total += n;
  EXPECT_EQ(total, 303u);
}

TEST(Labels, Errors) {
  const Vocabulary v = Vocabulary::parse("characters=bride,groom\nscenes=wedding\n");
  EXPECT_EQ(labelError("person_id,character,scene\n1,satyr,wedding\n", v),
            ErrorCode::UnknownCharacter);
  EXPECT_EQ(labelError("person_id,character,scene\n1,bride,battle\n", v),
            ErrorCode::UnknownScene);
  EXPECT_EQ(labelError("person_id,character,scene\n1,bride,wedding\n1,groom,wedding\n", v),
            ErrorCode::DuplicatePersonId);
  EXPECT_EQ(labelError("person_id,character,scene\n1,bride\n", v), ErrorCode::MalformedRecord);
  EXPECT_EQ(labelError("id,who,where\n", v), ErrorCode::MalformedRecord);

  std::string many = "person_id,character,scene\n";
  for (int i = 0; i < 6; ++i) many += std::to_string(i) + ",c,s" + std::to_string(i) + "\n";
  EXPECT_EQ(labelError(many, std::nullopt), ErrorCode::VocabularyOverflow);
}

TEST(Labels, RoundTrip) {
  const LabelMap labels = parseRetrievalLabels(readFile(kData + "/ca_val_labels.csv"));
  EXPECT_EQ(parseRetrievalLabels(writeRetrievalLabels(labels)), labels);
}

}  // namespace
}  // namespace poseforge
