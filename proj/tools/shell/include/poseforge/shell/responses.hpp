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

// Response documents shared by the CLI (`--format json`) and the HTTP
// service. Field order is fixed so clients can compare bodies verbatim.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "poseforge/retrieval.hpp"

namespace poseforge::shell {

// Accepts 51 numbers separated by whitespace and/or commas, optionally
// wrapped in [ ]. Throws WrongLength, NonFiniteValue, InvalidVisibilityFlag
// or InvalidArgument.
PoseAnnotation parsePoseText(std::string_view text);

// Area of the box spanned by the labeled joints; 0 for fewer than two
// distinct positions.
double poseExtentArea(const PoseAnnotation& pose);

std::string healthBody(const RetrievalIndex& index);
std::string entriesPageBody(const RetrievalIndex& index, std::size_t offset, std::size_t limit);
std::string entryBody(const IndexEntry& entry);

// `queryId` is empty for ad-hoc poses.
std::string retrievalBody(const RetrievalIndex& index, std::optional<std::string_view> queryId,
                          LabelMode mode, std::size_t k, const std::vector<RankedResult>& results);
std::string retrievalText(const RetrievalIndex& index, std::optional<std::string_view> queryId,
                          LabelMode mode, std::size_t k, const std::vector<RankedResult>& results);

std::string summaryBody(const RetrievalSummary& summary);
std::string summaryText(const RetrievalSummary& summary);

std::string errorBody(std::string_view error, std::string_view detail);

}  // namespace poseforge::shell
