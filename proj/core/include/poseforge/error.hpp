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

#include <stdexcept>
#include <string>
#include <string_view>

namespace poseforge {

// Every failure raised by the library carries one of these categories.
enum class ErrorCode {
  // dataset-core
  WrongLength,
  NonFiniteValue,
  InvalidVisibilityFlag,
  MissingSplit,
  // annotation-ingest
  SyntaxError,
  DanglingImageReference,
  DuplicateId,
  SchemaViolation,
  UnknownCharacter,
  UnknownScene,
  DuplicatePersonId,
  MalformedRecord,
  VocabularyOverflow,
  // similarity-metrics
  NoLabeledKeypoints,
  NonPositiveArea,
  // eval-protocol
  MissingScore,
  EmptyGroundTruth,
  UnknownImage,
  InvalidConfig,
  // adain-transform / tensors
  InvalidTensor,
  ChannelMismatch,
  ShapeMismatch,
  AlphaOutOfRange,
  CorruptTensor,
  // loss-lab
  NegativeComponent,
  LengthMismatch,
  NegativeInput,
  InvalidWeights,
  // retrieval-engine
  UnlabeledPose,
  EmptyIndex,
  UnlabeledQuery,
  TooFewResults,
  CorruptIndex,
  NotFound,
  // general
  InvalidArgument,
  IoError,
  BindError,
};

std::string_view errorCodeName(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace poseforge
