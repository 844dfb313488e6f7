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
#include "poseforge/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "poseforge/error.hpp"

namespace poseforge {

namespace {

bool rankedBefore(const RankedResult& a, const RankedResult& b) {
  if (a.score.value != b.score.value) return a.score.value > b.score.value;
  return a.personId < b.personId;
}

std::vector<std::string> distinct(std::span<const IndexEntry> entries, LabelMode mode) {
  std::set<std::string> names;
  for (const auto& e : entries) names.insert(e.label(mode));
  return {names.begin(), names.end()};
}

}  // namespace

std::string_view labelModeName(LabelMode mode) {
  return mode == LabelMode::Character ? "character" : "scene";
}

LabelMode parseLabelMode(std::string_view name) {
  if (name == "character") return LabelMode::Character;
  if (name == "scene") return LabelMode::Scene;
  throw Error(ErrorCode::InvalidArgument, fmt::format("unknown label mode '{}'", name));
}

RetrievalIndex RetrievalIndex::build(std::vector<IndexEntry> entries, const OksParams& params) {
  params.validate();
  RetrievalIndex index;
  index.params_ = params;
  for (const auto& e : entries) {
    if (e.pose.numLabeled() == 0) {
      throw Error(ErrorCode::UnlabeledPose, fmt::format("entry '{}'", e.personId));
    }
    if (!(e.area > 0.0) || !std::isfinite(e.area)) {
      throw Error(ErrorCode::NonPositiveArea, fmt::format("entry '{}' area {}", e.personId, e.area));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const IndexEntry& a, const IndexEntry& b) { return a.personId < b.personId; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].personId == entries[i - 1].personId) {
      throw Error(ErrorCode::DuplicatePersonId, fmt::format("'{}'", entries[i].personId));
    }
  }
  index.entries_ = std::move(entries);
  const auto chars = distinct(index.entries_, LabelMode::Character);
  const auto scenes = distinct(index.entries_, LabelMode::Scene);
  if (chars.size() > kMaxCharacters) {
    throw Error(ErrorCode::VocabularyOverflow,
                fmt::format("{} distinct characters, at most {}", chars.size(), kMaxCharacters));
  }
  if (scenes.size() > kMaxScenes) {
    throw Error(ErrorCode::VocabularyOverflow,
                fmt::format("{} distinct scenes, at most {}", scenes.size(), kMaxScenes));
  }
  index.byId_.reserve(index.entries_.size());
  for (std::size_t i = 0; i < index.entries_.size(); ++i) {
    index.byId_.emplace(index.entries_[i].personId, i);
  }
  return index;
}

const IndexEntry* RetrievalIndex::find(std::string_view personId) const {
  auto it = byId_.find(std::string(personId));
  return it == byId_.end() ? nullptr : &entries_[it->second];
}

std::vector<std::string> RetrievalIndex::characters() const {
  return distinct(entries_, LabelMode::Character);
}

std::vector<std::string> RetrievalIndex::scenes() const {
  return distinct(entries_, LabelMode::Scene);
}

std::vector<RankedResult> RetrievalIndex::query(const PoseAnnotation& queryPose, double queryArea,
                                                std::optional<std::string_view> excludeId,
                                                std::size_t k) const {
  if (entries_.empty()) throw Error(ErrorCode::EmptyIndex, "index has no entries");
  if (queryPose.numLabeled() == 0) {
    throw Error(ErrorCode::UnlabeledQuery, "query pose has no labeled keypoints");
  }
  if (!(queryArea > 0.0) || !std::isfinite(queryArea)) {
    throw Error(ErrorCode::NonPositiveArea, fmt::format("query area {}", queryArea));
  }
  std::vector<RankedResult> all;
  all.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (excludeId && e.personId == *excludeId) continue;
    all.push_back({e.personId, oks(e.pose, queryPose, queryArea, params_), 0});
  }
  const std::size_t n = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n), all.end(),
                    rankedBefore);
  all.resize(n);
  for (std::size_t i = 0; i < n; ++i) all[i].rank = i + 1;
  return all;
}

std::vector<RankedResult> RetrievalIndex::queryById(std::string_view personId,
                                                    std::size_t k) const {
  const IndexEntry* e = find(personId);
  if (!e) throw Error(ErrorCode::NotFound, fmt::format("person '{}'", personId));
  return query(e->pose, e->area, e->personId, k);
}

double precisionAtK(std::span<const RankedResult> results, std::string_view queryLabel,
                    const std::function<std::string_view(std::string_view)>& labelOf,
                    std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (results.size() < k) {
    throw Error(ErrorCode::TooFewResults, fmt::format("{} results for k={}", results.size(), k));
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (labelOf(results[i].personId) == queryLabel) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

std::optional<double> averagePrecision(const std::vector<bool>& relevance, std::size_t relevantTotal,
                                       std::optional<std::size_t> cutoff) {
  const std::size_t depth = cutoff ? std::min(*cutoff, relevance.size()) : relevance.size();
  std::size_t hits = 0;
  double sum = 0.0;
  for (std::size_t r = 0; r < depth; ++r) {
    if (!relevance[r]) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(r + 1);
  }
  const std::size_t denom = cutoff ? hits : relevantTotal;
  if (denom == 0) return std::nullopt;
  return sum / static_cast<double>(denom);
}

RetrievalSummary retrievalMap(const RetrievalIndex& index, LabelMode mode,
                              std::optional<std::size_t> cutoff) {
  if (index.empty()) throw Error(ErrorCode::EmptyIndex, "index has no entries");
  RetrievalSummary summary;
  summary.mode = mode;
  summary.queries = index.size();

  const auto labelOf = [&](std::string_view id) -> std::string_view {
    return index.find(id)->label(mode);
  };
  double p1 = 0.0;
  double p5 = 0.0;
  double apSum = 0.0;
  for (const IndexEntry& q : index.entries()) {
    const auto ranking = index.query(q.pose, q.area, q.personId, index.size());
    const std::string& queryLabel = q.label(mode);
    if (!ranking.empty()) {
      p1 += precisionAtK(ranking, queryLabel, labelOf, 1);
      p5 += precisionAtK(ranking, queryLabel, labelOf, std::min<std::size_t>(5, ranking.size()));
    }
    std::vector<bool> relevance(ranking.size());
    std::size_t relevantTotal = 0;
    for (std::size_t i = 0; i < ranking.size(); ++i) {
      relevance[i] = labelOf(ranking[i].personId) == queryLabel;
      if (relevance[i]) ++relevantTotal;
    }
    if (auto ap = averagePrecision(relevance, relevantTotal, cutoff)) {
      apSum += *ap;
      ++summary.queriesWithRelevant;
    }
  }
  const double n = static_cast<double>(summary.queries);
  summary.meanPrecisionAt1 = p1 / n;
  summary.meanPrecisionAt5 = p5 / n;
  summary.mAP = summary.queriesWithRelevant == 0
                    ? 0.0
                    : apSum / static_cast<double>(summary.queriesWithRelevant);
  return summary;
}

EntryCollection collectEntries(const AnnotationDocument& doc, const LabelMap& labels) {
  EntryCollection out;
  std::set<std::string> used;
  for (const auto& rec : doc.annotations) {
    if (!rec.pose || rec.pose->numLabeled() == 0) continue;
    const std::string id = std::to_string(rec.id);
    auto it = labels.find(id);
    if (it == labels.end()) {
      out.unlabeled.push_back(rec.id);
      continue;
    }
    used.insert(id);
    out.entries.push_back({id, *rec.pose, rec.area, it->second.character, it->second.scene});
  }
  for (const auto& [id, label] : labels) {
    if (!used.contains(id)) out.orphanLabels.push_back(id);
  }
  return out;
}

}  // namespace poseforge
