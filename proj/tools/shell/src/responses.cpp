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
#include "poseforge/shell/responses.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "poseforge/error.hpp"

namespace poseforge::shell {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kApDefinition =
    "mean of precision at each relevant rank, query excluded from its own ranking";

Json entrySummary(const IndexEntry& e) {
  return Json{{"id", e.personId},
              {"character", e.character},
              {"scene", e.scene},
              {"area", e.area},
              {"numLabeled", e.pose.numLabeled()}};
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace

PoseAnnotation parsePoseText(std::string_view text) {
  std::vector<double> values;
  std::string token;
  const auto flush = [&] {
    if (token.empty()) return;
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size()) {
      throw Error(ErrorCode::InvalidArgument, fmt::format("'{}' is not a number", token));
    }
    values.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '[' || c == ']') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return normalizePose(values);
}

double poseExtentArea(const PoseAnnotation& pose) {
  bool any = false;
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const Keypoint& kp : pose.keypoints()) {
    if (!kp.labeled()) continue;
    if (!any) {
      x0 = x1 = kp.x;
      y0 = y1 = kp.y;
      any = true;
    }
    x0 = std::min(x0, kp.x);
    x1 = std::max(x1, kp.x);
    y0 = std::min(y0, kp.y);
    y1 = std::max(y1, kp.y);
  }
  return (x1 - x0) * (y1 - y0);
}

std::string healthBody(const RetrievalIndex& index) {
  return dump(Json{{"status", "ok"}, {"entries", index.size()}});
}

std::string entriesPageBody(const RetrievalIndex& index, std::size_t offset, std::size_t limit) {
  Json page{{"offset", offset}, {"limit", limit}, {"total", index.size()}};
  Json items = Json::array();
  const auto entries = index.entries();
  for (std::size_t i = offset; i < entries.size() && i - offset < limit; ++i) {
    items.push_back(entrySummary(entries[i]));
  }
  page["entries"] = std::move(items);
  return dump(page);
}

std::string entryBody(const IndexEntry& entry) {
  Json j = entrySummary(entry);
  j["keypoints"] = encodePose(entry.pose);
  return dump(j);
}

std::string retrievalBody(const RetrievalIndex& index, std::optional<std::string_view> queryId,
                          LabelMode mode, std::size_t k, const std::vector<RankedResult>& results) {
  Json j;
  j["query"] = queryId ? Json(std::string(*queryId)) : Json(nullptr);
  j["mode"] = labelModeName(mode);
  j["k"] = k;
  const IndexEntry* q = queryId ? index.find(*queryId) : nullptr;
  j["queryLabel"] = q ? Json(q->label(mode)) : Json(nullptr);
  Json items = Json::array();
  for (const auto& r : results) {
    const IndexEntry* e = index.find(r.personId);
    Json item{{"rank", r.rank}, {"id", r.personId}, {"score", r.score.value}};
    item["character"] = e ? e->character : "";
    item["scene"] = e ? e->scene : "";
    if (q) item["match"] = e && e->label(mode) == q->label(mode);
    items.push_back(std::move(item));
  }
  j["results"] = std::move(items);
  return dump(j);
}

std::string retrievalText(const RetrievalIndex& index, std::optional<std::string_view> queryId,
                          LabelMode mode, std::size_t k, const std::vector<RankedResult>& results) {
  std::string out = fmt::format("query={} mode={} k={}\n", queryId ? *queryId : "<pose>",
                                labelModeName(mode), k);
  for (const auto& r : results) {
    const IndexEntry* e = index.find(r.personId);
    out += fmt::format("{} {} {:.6f} {}\n", r.rank, r.personId, r.score.value,
                       e ? e->label(mode) : "");
  }
  return out;
}

std::string summaryBody(const RetrievalSummary& s) {
  return dump(Json{{"mode", labelModeName(s.mode)},
                   {"queries", s.queries},
                   {"queriesWithRelevant", s.queriesWithRelevant},
                   {"P@1", s.meanPrecisionAt1},
                   {"P@5", s.meanPrecisionAt5},
                   {"mAP", s.mAP},
                   {"apDefinition", kApDefinition}});
}

std::string summaryText(const RetrievalSummary& s) {
  return fmt::format(
      "mode={} queries={} with_relevant={} P@1={:.6f} P@5={:.6f} mAP={:.6f}\nap: {}\n",
      labelModeName(s.mode), s.queries, s.queriesWithRelevant, s.meanPrecisionAt1,
      s.meanPrecisionAt5, s.mAP, kApDefinition);
}

std::string errorBody(std::string_view error, std::string_view detail) {
  return dump(Json{{"error", error}, {"detail", detail}});
}

}  // namespace poseforge::shell
