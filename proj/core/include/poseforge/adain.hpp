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

// Feature-statistics style transfer: adaptive instance normalization with a
// content/style trade-off, plus the deterministic alpha and style sampling
// used to synthesize the styled dataset groups.
//
// The encoder and decoder are not part of this library; every operation
// takes feature tensors produced elsewhere.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "poseforge/dataset.hpp"
#include "poseforge/tensor.hpp"

namespace poseforge {

inline constexpr double kStatsEpsilon = 1e-5;

struct ChannelStats {
  std::vector<double> mean;
  // sqrt(population variance + epsilon)
  std::vector<double> std;
};

ChannelStats channelStats(const FeatureTensor& t, double epsilon = kStatsEpsilon);

// Per channel: styleStd * (content - contentMean) / contentStd + styleMean.
// Spatial sizes may differ; throws ChannelMismatch on differing channel
// counts.
FeatureTensor adain(const FeatureTensor& content, const FeatureTensor& style);

// (1 - alpha) * content + alpha * styled. alpha == 0 returns `content` and
// alpha == 1 returns `styled` unchanged. Throws ShapeMismatch or
// AlphaOutOfRange.
FeatureTensor alphaBlend(const FeatureTensor& content, const FeatureTensor& styled, double alpha);

// alphaBlend(content, adain(content, style), alpha).
FeatureTensor stylize(const FeatureTensor& content, const FeatureTensor& style, double alpha);

// Fixed mode returns its value. Uniform mode returns a value in [0, 1)
// that depends only on (cfg.seed, drawIndex).
double sampleAlpha(const StyleConfig& cfg, std::uint64_t drawIndex);

struct StyleDraw {
  std::uint64_t drawIndex = 0;
  std::size_t styleIndex = 0;
  std::string styleId;
  double alpha = 0.0;

  friend bool operator==(const StyleDraw&, const StyleDraw&) = default;
};

// Style image and alpha for one content image. Throws InvalidArgument if
// the config lists no style ids.
StyleDraw drawStyle(const StyleConfig& cfg, std::uint64_t drawIndex);

// One draw per content image, drawIndex = position in the sequence.
std::vector<StyleDraw> planStyledGroup(const StyleConfig& cfg, std::size_t contentCount);

}  // namespace poseforge
