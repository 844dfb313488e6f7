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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace poseforge {

enum class DatasetName { CP, SCP, CA };
enum class Split { Train, Val };
enum class Quantity { Images, Persons, Poses };

std::string_view datasetNameString(DatasetName name);
std::string_view splitString(Split split);
std::string_view quantityString(Quantity quantity);

// Split-level counts for one dataset.
struct DatasetManifest {
  DatasetName name = DatasetName::CP;
  Split split = Split::Train;
  std::uint64_t imageCount = 0;
  std::uint64_t personCount = 0;
  std::uint64_t poseCount = 0;

  std::uint64_t count(Quantity q) const;
  friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

struct PublishedTotals {
  DatasetName name;
  std::uint64_t images;
  std::uint64_t persons;
  std::uint64_t poses;

  std::uint64_t count(Quantity q) const;
};

// Totals of the CP, SCP and CA collections. SCP shares CP's counts since it
// restyles the same images.
std::span<const PublishedTotals> publishedTotals();

// Per-split counts matching publishedTotals(), six manifests in all.
std::vector<DatasetManifest> publishedManifests();

struct ManifestCheck {
  DatasetName dataset;
  Quantity quantity;
  std::uint64_t train = 0;
  std::uint64_t val = 0;
  std::uint64_t expectedTotal = 0;
  // train + val - expectedTotal
  std::int64_t delta = 0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ManifestCheck> checks;

  bool allPass() const;
};

// Checks Train + Val == Total for every dataset that appears in `manifests`.
// Throws MissingSplit if a dataset is missing one of its two splits, and
// InvalidArgument for a repeated (dataset, split) pair or a dataset without
// reference totals.
ValidationReport validateManifest(std::span<const DatasetManifest> manifests,
                                  std::span<const PublishedTotals> totals = publishedTotals());

// CSV with header `dataset,split,images,persons,poses`.
std::vector<DatasetManifest> parseManifestCsv(std::string_view text);
std::string writeManifestCsv(std::span<const DatasetManifest> manifests);

// One line per check plus a summary line.
std::string formatValidationReport(const ValidationReport& report);

}  // namespace poseforge
