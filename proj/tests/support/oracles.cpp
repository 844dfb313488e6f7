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
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace poseforge::testing {

double scalarOks(const RawPose& pred, const RawPose& gt, double area) {
  double sum = 0.0;
  int labeled = 0;
  for (int j = 0; j < 17; ++j) {
    if (gt[3 * j + 2] == 0) continue;
    ++labeled;
    const double dx = pred[3 * j] - gt[3 * j];
    const double dy = pred[3 * j + 1] - gt[3 * j + 1];
    const double k = 2.0 * kCocoSigmas[j];
    sum += std::exp(-(dx * dx + dy * dy) / (2.0 * area * k * k));
  }
  return labeled == 0 ? 0.0 : sum / labeled;
}

double rasterIou(int ax, int ay, int aw, int ah, int bx, int by, int bw, int bh) {
  const int x0 = std::min(ax, bx), y0 = std::min(ay, by);
  const int x1 = std::max(ax + aw, bx + bw), y1 = std::max(ay + ah, by + bh);
  long inter = 0, uni = 0;
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      const bool inA = x >= ax && x < ax + aw && y >= ay && y < ay + ah;
      const bool inB = x >= bx && x < bx + bw && y >= by && y < by + bh;
      inter += inA && inB;
      uni += inA || inB;
    }
  }
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<int> greedyOracle(const std::vector<double>& scores,
                              const std::vector<std::vector<double>>& sim, double threshold) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // insertion sort keeps equal scores in input order
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j > 0 && scores[order[j]] > scores[order[j - 1]]; --j) {
      std::swap(order[j], order[j - 1]);
    }
  }
  const std::size_t m = n == 0 ? 0 : sim[0].size();
  std::vector<bool> taken(m, false);
  std::vector<int> out(n, -1);
  for (std::size_t d : order) {
    int best = -1;
    for (std::size_t g = 0; g < m; ++g) {
      if (taken[g] || sim[d][g] < threshold) continue;
      if (best < 0 || sim[d][g] > sim[d][best]) best = static_cast<int>(g);
    }
    if (best >= 0) {
      taken[best] = true;
      out[d] = best;
    }
  }
  return out;
}

TwoPassStats twoPassStats(const std::vector<double>& data, std::size_t channels,
                          std::size_t plane, double eps) {
  TwoPassStats s;
  for (std::size_t c = 0; c < channels; ++c) {
    double sum = 0.0;
    for (std::size_t i = 0; i < plane; ++i) sum += data[c * plane + i];
    const double mean = sum / plane;
    double sq = 0.0;
    for (std::size_t i = 0; i < plane; ++i) {
      const double d = data[c * plane + i] - mean;
      sq += d * d;
    }
    s.mean.push_back(mean);
    s.std.push_back(std::sqrt(sq / plane + eps));
  }
  return s;
}

std::vector<double> adainOracle(const std::vector<double>& content,
                                const std::vector<double>& style, std::size_t channels,
                                std::size_t plane, double eps) {
  const TwoPassStats sc = twoPassStats(content, channels, plane, eps);
  const std::size_t stylePlane = style.size() / channels;
  const TwoPassStats ss = twoPassStats(style, channels, stylePlane, eps);
  std::vector<double> out(content.size());
  for (std::size_t c = 0; c < channels; ++c) {
    for (std::size_t i = 0; i < plane; ++i) {
      const double x = content[c * plane + i];
      out[c * plane + i] = ss.std[c] * (x - sc.mean[c]) / sc.std[c] + ss.mean[c];
    }
  }
  return out;
}

double naiveMse(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return sum / a.size();
}

std::vector<OracleHit> bruteForceRanking(const std::vector<OracleEntry>& entries,
                                         std::size_t query) {
  std::vector<OracleHit> hits;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i == query) continue;
    // query is the reference pose, its area the scale
    hits.push_back({entries[i].id,
                    scalarOks(entries[i].pose, entries[query].pose, entries[query].area)});
  }
  std::sort(hits.begin(), hits.end(), [](const OracleHit& a, const OracleHit& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });
  return hits;
}

OracleSummary bruteForceSummary(const std::vector<OracleEntry>& entries) {
  OracleSummary s;
  double sumP1 = 0.0, sumP5 = 0.0, sumAp = 0.0;
  for (std::size_t q = 0; q < entries.size(); ++q) {
    const auto hits = bruteForceRanking(entries, q);
    std::vector<int> rel;
    for (const auto& h : hits) {
      const auto it = std::find_if(entries.begin(), entries.end(),
                                   [&](const OracleEntry& e) { return e.id == h.id; });
      rel.push_back(it->label == entries[q].label ? 1 : 0);
    }
    ++s.queries;
    if (rel.empty()) continue;
    sumP1 += rel[0];
    const std::size_t n5 = std::min<std::size_t>(5, rel.size());
    sumP5 += static_cast<double>(std::accumulate(rel.begin(), rel.begin() + n5, 0)) / n5;
    const int total = std::accumulate(rel.begin(), rel.end(), 0);
    if (total == 0) continue;
    ++s.queriesWithRelevant;
    double ap = 0.0;
    int seen = 0;
    for (std::size_t r = 0; r < rel.size(); ++r) {
      if (!rel[r]) continue;
      ++seen;
      ap += static_cast<double>(seen) / (r + 1);
    }
    sumAp += ap / total;
  }
  if (s.queries > 0) {
    s.p1 = sumP1 / s.queries;
    s.p5 = sumP5 / s.queries;
  }
  if (s.queriesWithRelevant > 0) s.mAP = sumAp / s.queriesWithRelevant;
  return s;
}

}  // namespace poseforge::testing
