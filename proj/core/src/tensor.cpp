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
#include "poseforge/tensor.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "poseforge/error.hpp"
#include "poseforge/keyvalue.hpp"

namespace poseforge {

namespace {

constexpr std::array<char, 4> kMagic = {'F', 'T', 'N', 'S'};
// Refuse headers describing more than 1 GiB of payload.
constexpr std::uint64_t kMaxElements = (std::uint64_t{1} << 30) / 4;

void putU32(std::ostream& out, std::uint32_t v) {
  const std::array<char, 4> b = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                                 static_cast<char>((v >> 16) & 0xFF),
                                 static_cast<char>((v >> 24) & 0xFF)};
  out.write(b.data(), 4);
}

std::uint32_t getU32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 4)) {
    throw Error(ErrorCode::CorruptTensor, "truncated header");
  }
  return std::uint32_t{b[0]} | (std::uint32_t{b[1]} << 8) | (std::uint32_t{b[2]} << 16) |
         (std::uint32_t{b[3]} << 24);
}

}  // namespace

FeatureTensor::FeatureTensor(std::size_t channels, std::size_t height, std::size_t width,
                             std::vector<double> data)
    : channels_(channels), height_(height), width_(width), data_(std::move(data)) {
  if (channels_ == 0 || height_ == 0 || width_ == 0) {
    throw Error(ErrorCode::InvalidTensor, "zero dimension");
  }
  if (height_ * width_ < 2) {
    throw Error(ErrorCode::InvalidTensor, "need at least two spatial positions per channel");
  }
  if (data_.size() != channels_ * height_ * width_) {
    throw Error(ErrorCode::InvalidTensor,
                fmt::format("{}x{}x{} tensor given {} values", channels_, height_, width_,
                            data_.size()));
  }
  for (double v : data_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidTensor, "non-finite value");
  }
}

FeatureTensor FeatureTensor::filled(std::size_t channels, std::size_t height, std::size_t width,
                                    double value) {
  return FeatureTensor(channels, height, width,
                       std::vector<double>(channels * height * width, value));
}

std::span<const double> FeatureTensor::channel(std::size_t c) const {
  return std::span<const double>(data_).subspan(c * spatialSize(), spatialSize());
}

double FeatureTensor::at(std::size_t c, std::size_t y, std::size_t x) const {
  return data_[(c * height_ + y) * width_ + x];
}

bool FeatureTensor::sameShape(const FeatureTensor& other) const {
  return channels_ == other.channels_ && height_ == other.height_ && width_ == other.width_;
}

void writeTensor(std::ostream& out, const FeatureTensor& tensor) {
  static_assert(sizeof(float) == 4 && std::numeric_limits<float>::is_iec559);
  out.write(kMagic.data(), kMagic.size());
  putU32(out, static_cast<std::uint32_t>(tensor.channels()));
  putU32(out, static_cast<std::uint32_t>(tensor.height()));
  putU32(out, static_cast<std::uint32_t>(tensor.width()));
  for (double v : tensor.data()) {
    putU32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  }
}

FeatureTensor readTensor(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), 4) || magic != kMagic) {
    throw Error(ErrorCode::CorruptTensor, "bad magic");
  }
  const std::uint32_t c = getU32(in);
  const std::uint32_t h = getU32(in);
  const std::uint32_t w = getU32(in);
  const std::uint64_t n = std::uint64_t{c} * h * w;
  if (n == 0 || n > kMaxElements) {
    throw Error(ErrorCode::CorruptTensor, fmt::format("implausible shape {}x{}x{}", c, h, w));
  }
  std::vector<double> data(n);
  for (auto& v : data) {
    std::uint32_t bits = 0;
    try {
      bits = getU32(in);
    } catch (const Error&) {
      throw Error(ErrorCode::CorruptTensor, "truncated payload");
    }
    v = static_cast<double>(std::bit_cast<float>(bits));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error(ErrorCode::CorruptTensor, "trailing bytes after payload");
  }
  try {
    return FeatureTensor(c, h, w, std::move(data));
  } catch (const Error& e) {
    throw Error(ErrorCode::CorruptTensor, e.detail());
  }
}

std::string encodeTensor(const FeatureTensor& tensor) {
  std::ostringstream out(std::ios::binary);
  writeTensor(out, tensor);
  return std::move(out).str();
}

FeatureTensor decodeTensor(std::string_view bytes) {
  std::istringstream in(std::string(bytes), std::ios::binary);
  return readTensor(in);
}

void saveTensor(const std::filesystem::path& path, const FeatureTensor& tensor) {
  writeFile(path, encodeTensor(tensor));
}

FeatureTensor loadTensor(const std::filesystem::path& path) {
  return decodeTensor(readFile(path));
}

}  // namespace poseforge
