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

// Small text helpers shared by the line-oriented file formats
// (manifests, label tables, vocabulary and service config files).

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace poseforge {

std::string_view trim(std::string_view s);

// Splits on '\n' and drops a trailing '\r' from each line. A final
// newline does not produce an empty trailing line.
std::vector<std::string_view> splitLines(std::string_view text);

std::vector<std::string_view> splitFields(std::string_view line, char sep);

// `key=value` lines; blank lines and lines starting with '#' are skipped.
// Keys and values are trimmed. Throws MalformedRecord on a line without
// '=' or on a repeated key.
std::map<std::string, std::string> parseKeyValue(std::string_view text);

// Whole file as bytes. Throws IoError.
std::string readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, std::string_view bytes);

}  // namespace poseforge
