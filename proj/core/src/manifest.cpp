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
#include "poseforge/manifest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <optional>

#include <fmt/format.h>

#include "poseforge/error.hpp"
#include "poseforge/keyvalue.hpp"

namespace poseforge {

namespace {

constexpr std::array<PublishedTotals, 3> kPublished = {{
    {DatasetName::CP, 66808, 268029, 156165},
    {DatasetName::SCP, 66808, 268029, 156165},
    {DatasetName::CA, 1513, 2629, 1728},
}};

constexpr std::array<Quantity, 3> kQuantities = {Quantity::Images, Quantity::Persons,
                                                 Quantity::Poses};

DatasetName parseDatasetName(std::string_view s, std::size_t line) {
  if (s == "CP") return DatasetName::CP;
  if (s == "SCP") return DatasetName::SCP;
  if (s == "CA") return DatasetName::CA;
  throw Error(ErrorCode::MalformedRecord, fmt::format("line {}: unknown dataset '{}'", line, s));
}

Split parseSplit(std::string_view s, std::size_t line) {
  if (s == "Train" || s == "train") return Split::Train;
  if (s == "Val" || s == "val") return Split::Val;
  throw Error(ErrorCode::MalformedRecord, fmt::format("line {}: unknown split '{}'", line, s));
}

std::uint64_t parseCount(std::string_view s, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::MalformedRecord, fmt::format("line {}: bad count '{}'", line, s));
  }
  return value;
}

}  // namespace

std::string_view datasetNameString(DatasetName name) {
  switch (name) {
    case DatasetName::CP: return "CP";
    case DatasetName::SCP: return "SCP";
    case DatasetName::CA: return "CA";
  }
  return "?";
}

std::string_view splitString(Split split) { return split == Split::Train ? "Train" : "Val"; }

std::string_view quantityString(Quantity quantity) {
  switch (quantity) {
    case Quantity::Images: return "images";
    case Quantity::Persons: return "persons";
    case Quantity::Poses: return "poses";
  }
  return "?";
}

std::uint64_t DatasetManifest::count(Quantity q) const {
  switch (q) {
    case Quantity::Images: return imageCount;
    case Quantity::Persons: return personCount;
    case Quantity::Poses: return poseCount;
  }
  return 0;
}

std::uint64_t PublishedTotals::count(Quantity q) const {
  switch (q) {
    case Quantity::Images: return images;
    case Quantity::Persons: return persons;
    case Quantity::Poses: return poses;
  }
  return 0;
}

std::span<const PublishedTotals> publishedTotals() { return kPublished; }

std::vector<DatasetManifest> publishedManifests() {
  return {
      {DatasetName::CP, Split::Train, 64115, 257252, 149813},
      {DatasetName::CP, Split::Val, 2693, 10777, 6352},
      {DatasetName::SCP, Split::Train, 64115, 257252, 149813},
      {DatasetName::SCP, Split::Val, 2693, 10777, 6352},
      {DatasetName::CA, Split::Train, 1210, 2098, 1425},
      {DatasetName::CA, Split::Val, 303, 531, 303},
  };
}

bool ValidationReport::allPass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ManifestCheck& c) { return c.pass; });
}

ValidationReport validateManifest(std::span<const DatasetManifest> manifests,
                                  std::span<const PublishedTotals> totals) {
  struct Pair {
    std::optional<DatasetManifest> train;
    std::optional<DatasetManifest> val;
  };
  std::map<DatasetName, Pair> byDataset;
  for (const DatasetManifest& m : manifests) {
    Pair& p = byDataset[m.name];
    auto& slot = m.split == Split::Train ? p.train : p.val;
    if (slot) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("{} {} listed twice", datasetNameString(m.name), splitString(m.split)));
    }
    slot = m;
  }

  ValidationReport report;
  for (const auto& [name, pair] : byDataset) {
    if (!pair.train || !pair.val) {
      throw Error(ErrorCode::MissingSplit,
                  fmt::format("{} is missing its {} split", datasetNameString(name),
                              pair.train ? "Val" : "Train"));
    }
    auto ref = std::find_if(totals.begin(), totals.end(),
                            [name = name](const PublishedTotals& t) { return t.name == name; });
    if (ref == totals.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("no reference totals for {}", datasetNameString(name)));
    }
    for (Quantity q : kQuantities) {
      ManifestCheck check;
      check.dataset = name;
      check.quantity = q;
      check.train = pair.train->count(q);
      check.val = pair.val->count(q);
      check.expectedTotal = ref->count(q);
      check.delta = static_cast<std::int64_t>(check.train + check.val) -
                    static_cast<std::int64_t>(check.expectedTotal);
      check.pass = check.delta == 0;
      report.checks.push_back(check);
    }
  }
  return report;
}

std::vector<DatasetManifest> parseManifestCsv(std::string_view text) {
  std::vector<DatasetManifest> out;
  bool headerSeen = false;
  std::size_t lineNo = 0;
  for (std::string_view line : splitLines(text)) {
    ++lineNo;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = splitFields(line, ',');
    if (!headerSeen) {
      if (fields.size() != 5 || trim(fields[0]) != "dataset" || trim(fields[1]) != "split") {
        throw Error(ErrorCode::MalformedRecord,
                    "expected header 'dataset,split,images,persons,poses'");
      }
      headerSeen = true;
      continue;
    }
    if (fields.size() != 5) {
      throw Error(ErrorCode::MalformedRecord,
                  fmt::format("line {}: expected 5 fields, got {}", lineNo, fields.size()));
    }
    DatasetManifest m;
    m.name = parseDatasetName(trim(fields[0]), lineNo);
    m.split = parseSplit(trim(fields[1]), lineNo);
    m.imageCount = parseCount(trim(fields[2]), lineNo);
    m.personCount = parseCount(trim(fields[3]), lineNo);
    m.poseCount = parseCount(trim(fields[4]), lineNo);
    out.push_back(m);
  }
  if (!headerSeen) throw Error(ErrorCode::MalformedRecord, "empty manifest");
  return out;
}

std::string writeManifestCsv(std::span<const DatasetManifest> manifests) {
  std::string out = "dataset,split,images,persons,poses\n";
  for (const auto& m : manifests) {
    out += fmt::format("{},{},{},{},{}\n", datasetNameString(m.name), splitString(m.split),
                       m.imageCount, m.personCount, m.poseCount);
  }
  return out;
}

std::string formatValidationReport(const ValidationReport& report) {
  std::string out;
  std::size_t passed = 0;
  for (const ManifestCheck& c : report.checks) {
    if (c.pass) ++passed;
    out += fmt::format("{:<4} {:<8} {} + {} = {} expected {} delta {} {}\n",
                       datasetNameString(c.dataset), quantityString(c.quantity), c.train, c.val,
                       c.train + c.val, c.expectedTotal, c.delta, c.pass ? "PASS" : "FAIL");
  }
  out += fmt::format("summary checks={} passed={} failed={}\n", report.checks.size(), passed,
                     report.checks.size() - passed);
  return out;
}

}  // namespace poseforge
