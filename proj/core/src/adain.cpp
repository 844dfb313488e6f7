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
#include "poseforge/adain.hpp"

#include <cmath>
#include <random>
#include <variant>

#include <fmt/format.h>

#include "poseforge/error.hpp"

namespace poseforge {

namespace {

// Counter-based stream: a fresh engine per (seed, drawIndex, stream) keeps
// every draw independent of evaluation order.
std::uint64_t keyedDraw(std::uint64_t seed, std::uint64_t drawIndex, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(drawIndex),
                    static_cast<std::uint32_t>(drawIndex >> 32), stream};
  std::mt19937_64 engine(seq);
  return engine();
}

double unitInterval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

ChannelStats channelStats(const FeatureTensor& t, double epsilon) {
  ChannelStats stats;
  stats.mean.resize(t.channels());
  stats.std.resize(t.channels());
  for (std::size_t c = 0; c < t.channels(); ++c) {
    // Welford
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t n = 0;
    for (double v : t.channel(c)) {
      ++n;
      const double delta = v - mean;
      mean += delta / static_cast<double>(n);
      m2 += delta * (v - mean);
    }
    stats.mean[c] = mean;
    stats.std[c] = std::sqrt(m2 / static_cast<double>(n) + epsilon);
  }
  return stats;
}

FeatureTensor adain(const FeatureTensor& content, const FeatureTensor& style) {
  if (content.channels() != style.channels()) {
    throw Error(ErrorCode::ChannelMismatch, fmt::format("content has {} channels, style has {}",
                                                        content.channels(), style.channels()));
  }
  const ChannelStats cs = channelStats(content);
  const ChannelStats ss = channelStats(style);
  std::vector<double> out;
  out.reserve(content.size());
  for (std::size_t c = 0; c < content.channels(); ++c) {
    const double scale = ss.std[c] / cs.std[c];
    for (double v : content.channel(c)) out.push_back((v - cs.mean[c]) * scale + ss.mean[c]);
  }
  return FeatureTensor(content.channels(), content.height(), content.width(), std::move(out));
}

FeatureTensor alphaBlend(const FeatureTensor& content, const FeatureTensor& styled, double alpha) {
  if (!content.sameShape(styled)) {
    throw Error(ErrorCode::ShapeMismatch, "content and styled tensors differ in shape");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::AlphaOutOfRange, fmt::format("alpha {} outside [0, 1]", alpha));
  }
  if (alpha == 0.0) return content;
  if (alpha == 1.0) return styled;
  const auto c = content.data();
  const auto s = styled.data();
  std::vector<double> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = (1.0 - alpha) * c[i] + alpha * s[i];
  return FeatureTensor(content.channels(), content.height(), content.width(), std::move(out));
}

FeatureTensor stylize(const FeatureTensor& content, const FeatureTensor& style, double alpha) {
  return alphaBlend(content, adain(content, style), alpha);
}

double sampleAlpha(const StyleConfig& cfg, std::uint64_t drawIndex) {
  cfg.validate();
  if (const auto* fixed = std::get_if<FixedAlpha>(&cfg.alphaMode)) return fixed->value;
  return unitInterval(keyedDraw(cfg.seed, drawIndex, 0));
}

StyleDraw drawStyle(const StyleConfig& cfg, std::uint64_t drawIndex) {
  if (cfg.styleIds.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("style set {} has no style ids", styleSetName(cfg.styleSet)));
  }
  StyleDraw d;
  d.drawIndex = drawIndex;
  d.styleIndex = static_cast<std::size_t>(keyedDraw(cfg.seed, drawIndex, 1) % cfg.styleIds.size());
  d.styleId = cfg.styleIds[d.styleIndex];
  d.alpha = sampleAlpha(cfg, drawIndex);
  return d;
}

std::vector<StyleDraw> planStyledGroup(const StyleConfig& cfg, std::size_t contentCount) {
  std::vector<StyleDraw> plan;
  plan.reserve(contentCount);
  for (std::size_t i = 0; i < contentCount; ++i) plan.push_back(drawStyle(cfg, i));
  return plan;
}

}  // namespace poseforge
