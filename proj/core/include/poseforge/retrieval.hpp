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

// Pose-based retrieval: an immutable index of labeled poses ranked by OKS
// against a query pose, with precision-at-k and retrieval mAP.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "poseforge/annotations.hpp"
#include "poseforge/dataset.hpp"
#include "poseforge/labels.hpp"
#include "poseforge/similarity.hpp"

namespace poseforge {

enum class LabelMode { Character, Scene };

std::string_view labelModeName(LabelMode mode);
// "character" / "scene"; throws InvalidArgument otherwise.
LabelMode parseLabelMode(std::string_view name);

struct IndexEntry {
  std::string personId;
  PoseAnnotation pose;
  double area = 0.0;
  std::string character;
  std::string scene;

  const std::string& label(LabelMode mode) const {
    return mode == LabelMode::Character ? character : scene;
  }
  friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};

struct RankedResult {
  std::string personId;
  SimilarityScore score;
  std::size_t rank = 0;  // 1-based

  friend bool operator==(const RankedResult&, const RankedResult&) = default;
};

// Read-only after build(); concurrent queries need no synchronization.
class RetrievalIndex {
 public:
  // An empty index.
  RetrievalIndex() = default;

  // Throws DuplicatePersonId, UnlabeledPose, NonPositiveArea, and
  // VocabularyOverflow when the entries use more than 15 characters or
  // 5 scenes. Entries are stored in personId order, so the order given here
  // never affects query results.
  static RetrievalIndex build(std::vector<IndexEntry> entries,
                              const OksParams& params = OksParams::coco());

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const IndexEntry> entries() const { return entries_; }
  const IndexEntry* find(std::string_view personId) const;
  const OksParams& oksParams() const { return params_; }

  // Distinct label names, sorted.
  std::vector<std::string> characters() const;
  std::vector<std::string> scenes() const;

  // Top-k entries by oks(entry.pose, queryPose, queryArea): the query plays
  // the ground-truth role. The entry whose id equals `excludeId` is removed
  // first. Ties go to the smaller personId. Throws EmptyIndex,
  // UnlabeledQuery, NonPositiveArea.
  std::vector<RankedResult> query(const PoseAnnotation& queryPose, double queryArea,
                                  std::optional<std::string_view> excludeId, std::size_t k) const;

  // Query with a stored entry, excluding itself. Throws NotFound.
  std::vector<RankedResult> queryById(std::string_view personId, std::size_t k) const;

 private:
  std::vector<IndexEntry> entries_;
  std::unordered_map<std::string, std::size_t> byId_;
  OksParams params_ = OksParams::coco();
};

// Fraction of the first k results whose label equals `queryLabel`.
// Throws TooFewResults when results.size() < k, InvalidArgument for k == 0.
double precisionAtK(std::span<const RankedResult> results, std::string_view queryLabel,
                    const std::function<std::string_view(std::string_view)>& labelOf,
                    std::size_t k);

struct RetrievalSummary {
  LabelMode mode = LabelMode::Character;
  std::size_t queries = 0;
  // Queries with at least one same-label entry; only these enter mAP.
  std::size_t queriesWithRelevant = 0;
  double meanPrecisionAt1 = 0.0;
  double meanPrecisionAt5 = 0.0;
  double mAP = 0.0;
};

// Average precision of one ranking: mean over relevant ranks r of the
// precision at r, relative to `relevantTotal` relevant items. With a cutoff,
// only the first `cutoff` ranks count and the denominator becomes the
// number of relevant items found there. Returns nullopt if nothing is
// relevant.
std::optional<double> averagePrecision(const std::vector<bool>& relevance, std::size_t relevantTotal,
                                       std::optional<std::size_t> cutoff = std::nullopt);

// Every entry is used once as a query against the rest of the index.
// P@k uses min(k, size - 1) results per query. Throws EmptyIndex.
RetrievalSummary retrievalMap(const RetrievalIndex& index, LabelMode mode,
                              std::optional<std::size_t> cutoff = std::nullopt);

struct EntryCollection {
  std::vector<IndexEntry> entries;
  // Annotations with a labeled pose but no label record.
  std::vector<std::int64_t> unlabeled;
  // Label records naming no usable annotation.
  std::vector<std::string> orphanLabels;
};

// Joins pose-bearing annotations with label records keyed by the decimal
// annotation id. Annotations without labeled keypoints are skipped.
EntryCollection collectEntries(const AnnotationDocument& doc, const LabelMap& labels);

}  // namespace poseforge
