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

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace poseforge {

// Immutable channels x height x width activations, channel-major.
class FeatureTensor {
 public:
  // Throws InvalidTensor when a dimension is zero, height * width < 2,
  // data.size() != c * h * w, or a value is not finite.
  FeatureTensor(std::size_t channels, std::size_t height, std::size_t width,
                std::vector<double> data);

  static FeatureTensor filled(std::size_t channels, std::size_t height, std::size_t width,
                              double value);

  std::size_t channels() const { return channels_; }
  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  std::size_t spatialSize() const { return height_ * width_; }
  std::size_t size() const { return data_.size(); }

  std::span<const double> data() const { return data_; }
  std::span<const double> channel(std::size_t c) const;
  double at(std::size_t c, std::size_t y, std::size_t x) const;

  bool sameShape(const FeatureTensor& other) const;
  friend bool operator==(const FeatureTensor&, const FeatureTensor&) = default;

 private:
  std::size_t channels_;
  std::size_t height_;
  std::size_t width_;
  std::vector<double> data_;
};

// Interchange format, little-endian: "FTNS", u32 C, u32 H, u32 W, then
// C*H*W float32 values in channel-major order. Values are narrowed to
// float32 on write. Reading throws CorruptTensor on any framing error.
void writeTensor(std::ostream& out, const FeatureTensor& tensor);
FeatureTensor readTensor(std::istream& in);
std::string encodeTensor(const FeatureTensor& tensor);
FeatureTensor decodeTensor(std::string_view bytes);
void saveTensor(const std::filesystem::path& path, const FeatureTensor& tensor);
FeatureTensor loadTensor(const std::filesystem::path& path);

}  // namespace poseforge
