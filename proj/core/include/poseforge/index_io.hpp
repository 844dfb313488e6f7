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

// Binary persistence for RetrievalIndex.
//
// Layout (little-endian):
//   "PIDX"  u8 version (=1)  u32 entryCount
//   entryCount records:
//     u16 idLength, idLength bytes of UTF-8 person id
//     51 x f32 keypoint triplets (x, y, visibility)
//     f32 area
//     u16 character, u16 scene   (indices into the string table)
//   u32 stringCount, then stringCount x (u16 length, UTF-8 bytes)
//
// Coordinates and areas are narrowed to float32.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "poseforge/retrieval.hpp"

namespace poseforge {

inline constexpr std::uint8_t kIndexFormatVersion = 1;

void writeIndex(std::ostream& out, const RetrievalIndex& index);
// Throws CorruptIndex on framing errors or entries that violate the index
// invariants.
RetrievalIndex readIndex(std::istream& in);

std::string encodeIndex(const RetrievalIndex& index);
RetrievalIndex decodeIndex(std::string_view bytes);
void saveIndex(const std::filesystem::path& path, const RetrievalIndex& index);
RetrievalIndex loadIndex(const std::filesystem::path& path);

}  // namespace poseforge
