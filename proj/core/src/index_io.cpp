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
#include "poseforge/index_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "poseforge/error.hpp"
#include "poseforge/keyvalue.hpp"

namespace poseforge {

namespace {

constexpr std::array<char, 4> kMagic = {'P', 'I', 'D', 'X'};

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void bytes(std::string_view s) { out_.write(s.data(), static_cast<std::streamsize>(s.size())); }
  void u8(std::uint8_t v) { out_.put(static_cast<char>(v)); }
  void u16(std::uint16_t v) {
    u8(static_cast<std::uint8_t>(v & 0xFF));
    u8(static_cast<std::uint8_t>(v >> 8));
  }
  void u32(std::uint32_t v) {
    u16(static_cast<std::uint16_t>(v & 0xFFFF));
    u16(static_cast<std::uint16_t>(v >> 16));
  }
  void f32(double v) { u32(std::bit_cast<std::uint32_t>(static_cast<float>(v))); }
  void str(std::string_view s) {
    if (s.size() > std::numeric_limits<std::uint16_t>::max()) {
      throw Error(ErrorCode::InvalidArgument, "string longer than 65535 bytes");
    }
    u16(static_cast<std::uint16_t>(s.size()));
    bytes(s);
  }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::uint8_t u8() {
    const int c = in_.get();
    if (c == std::char_traits<char>::eof()) fail("unexpected end of file");
    return static_cast<std::uint8_t>(c);
  }
  std::uint16_t u16() {
    const std::uint16_t lo = u8();
    return static_cast<std::uint16_t>(lo | (std::uint16_t{u8()} << 8));
  }
  std::uint32_t u32() {
    const std::uint32_t lo = u16();
    return lo | (std::uint32_t{u16()} << 16);
  }
  double f32() { return static_cast<double>(std::bit_cast<float>(u32())); }
  std::string str() {
    const std::uint16_t n = u16();
    std::string s(n, '\0');
    if (n > 0 && !in_.read(s.data(), n)) fail("truncated string");
    return s;
  }
  bool atEnd() { return in_.peek() == std::char_traits<char>::eof(); }

  [[noreturn]] static void fail(std::string_view what) {
    throw Error(ErrorCode::CorruptIndex, std::string(what));
  }

 private:
  std::istream& in_;
};

struct RawEntry {
  std::string id;
  std::array<double, kPoseValues> pose{};
  double area = 0.0;
  std::uint16_t character = 0;
  std::uint16_t scene = 0;
};

}  // namespace

void writeIndex(std::ostream& out, const RetrievalIndex& index) {
  std::map<std::string, std::uint16_t> table;
  for (const auto& e : index.entries()) {
    table.emplace(e.character, 0);
    table.emplace(e.scene, 0);
  }
  std::uint16_t next = 0;
  for (auto& [name, id] : table) id = next++;

  Writer w(out);
  w.bytes(std::string_view(kMagic.data(), kMagic.size()));
  w.u8(kIndexFormatVersion);
  w.u32(static_cast<std::uint32_t>(index.size()));
  for (const auto& e : index.entries()) {
    w.str(e.personId);
    for (double v : encodePose(e.pose)) w.f32(v);
    w.f32(e.area);
    w.u16(table.at(e.character));
    w.u16(table.at(e.scene));
  }
  w.u32(static_cast<std::uint32_t>(table.size()));
  for (const auto& [name, id] : table) w.str(name);
}

RetrievalIndex readIndex(std::istream& in) {
  Reader r(in);
  std::array<char, 4> magic{};
  for (auto& c : magic) c = static_cast<char>(r.u8());
  if (magic != kMagic) Reader::fail("bad magic");
  const std::uint8_t version = r.u8();
  if (version != kIndexFormatVersion) Reader::fail(fmt::format("unsupported version {}", version));
  const std::uint32_t count = r.u32();

  std::vector<RawEntry> raw;
  // Reserve conservatively; count comes from untrusted input.
  raw.reserve(std::min<std::uint32_t>(count, 1u << 16));
  for (std::uint32_t i = 0; i < count; ++i) {
    RawEntry e;
    e.id = r.str();
    for (double& v : e.pose) v = r.f32();
    e.area = r.f32();
    e.character = r.u16();
    e.scene = r.u16();
    raw.push_back(std::move(e));
  }
  const std::uint32_t stringCount = r.u32();
  if (stringCount > std::numeric_limits<std::uint16_t>::max() + 1u) {
    Reader::fail("string table too large");
  }
  std::vector<std::string> strings;
  for (std::uint32_t i = 0; i < stringCount; ++i) strings.push_back(r.str());
  if (!r.atEnd()) Reader::fail("trailing bytes after string table");

  std::vector<IndexEntry> entries;
  entries.reserve(raw.size());
  try {
    for (auto& e : raw) {
      if (e.character >= strings.size() || e.scene >= strings.size()) {
        Reader::fail(fmt::format("entry '{}' has a label index outside the string table", e.id));
      }
      entries.push_back({std::move(e.id), normalizePose(e.pose), e.area, strings[e.character],
                         strings[e.scene]});
    }
    return RetrievalIndex::build(std::move(entries));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CorruptIndex) throw;
    throw Error(ErrorCode::CorruptIndex, std::string(e.what()));
  }
}

std::string encodeIndex(const RetrievalIndex& index) {
  std::ostringstream out(std::ios::binary);
  writeIndex(out, index);
  return std::move(out).str();
}

RetrievalIndex decodeIndex(std::string_view bytes) {
  std::istringstream in(std::string(bytes), std::ios::binary);
  return readIndex(in);
}

void saveIndex(const std::filesystem::path& path, const RetrievalIndex& index) {
  writeFile(path, encodeIndex(index));
}

RetrievalIndex loadIndex(const std::filesystem::path& path) { return decodeIndex(readFile(path)); }

}  // namespace poseforge
