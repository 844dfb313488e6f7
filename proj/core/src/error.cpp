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
#include "poseforge/error.hpp"

namespace poseforge {

std::string_view errorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::InvalidVisibilityFlag: return "InvalidVisibilityFlag";
    case ErrorCode::MissingSplit: return "MissingSplit";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DanglingImageReference: return "DanglingImageReference";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::UnknownCharacter: return "UnknownCharacter";
    case ErrorCode::UnknownScene: return "UnknownScene";
    case ErrorCode::DuplicatePersonId: return "DuplicatePersonId";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::VocabularyOverflow: return "VocabularyOverflow";
    case ErrorCode::NoLabeledKeypoints: return "NoLabeledKeypoints";
    case ErrorCode::NonPositiveArea: return "NonPositiveArea";
    case ErrorCode::MissingScore: return "MissingScore";
    case ErrorCode::EmptyGroundTruth: return "EmptyGroundTruth";
    case ErrorCode::UnknownImage: return "UnknownImage";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidTensor: return "InvalidTensor";
    case ErrorCode::ChannelMismatch: return "ChannelMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::CorruptTensor: return "CorruptTensor";
    case ErrorCode::NegativeComponent: return "NegativeComponent";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::UnlabeledPose: return "UnlabeledPose";
    case ErrorCode::EmptyIndex: return "EmptyIndex";
    case ErrorCode::UnlabeledQuery: return "UnlabeledQuery";
    case ErrorCode::TooFewResults: return "TooFewResults";
    case ErrorCode::CorruptIndex: return "CorruptIndex";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::BindError: return "BindError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(errorCodeName(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace poseforge
