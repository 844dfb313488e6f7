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
#include "poseforge/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "poseforge/error.hpp"

namespace poseforge {

namespace {

constexpr std::size_t kRecallPoints = 101;

// Same arithmetic as numpy.linspace(start, stop, n): i * step + start with
// the last sample pinned to stop.
std::vector<double> linspace(double start, double stop, std::size_t n) {
  std::vector<double> out(n);
  const double step = (stop - start) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(i) * step + start;
  out.back() = stop;
  return out;
}

const std::vector<double>& recallPoints() {
  static const std::vector<double> points = linspace(0.0, 1.0, kRecallPoints);
  return points;
}

double similarity(const PersonInstance& pred, const PersonInstance& gt, SimilarityKind kind,
                  const OksParams& params) {
  if (kind == SimilarityKind::IoU) return iou(pred.box, gt.box).value;
  if (!gt.hasLabeledPose() || !pred.pose) return 0.0;
  return oks(*pred.pose, *gt.pose, gt.area, params).value;
}

// Indices into `preds` by descending score, stable.
std::vector<std::size_t> scoreOrder(std::span<const PersonInstance> preds) {
  std::vector<std::size_t> order(preds.size());
  std::iota(order.begin(), order.end(), 0);
  for (const auto& p : preds) {
    if (!p.score) throw Error(ErrorCode::MissingScore, fmt::format("prediction {}", p.id));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return *preds[a].score > *preds[b].score; });
  return order;
}

// Greedy assignment over a precomputed similarity matrix. `sims[d][g]` is
// indexed by visiting order d; returns the matched gt index per detection.
std::vector<std::optional<std::size_t>> assign(const std::vector<std::vector<double>>& sims,
                                               std::span<const PersonInstance> gts,
                                               double threshold) {
  std::vector<bool> taken(gts.size(), false);
  std::vector<std::optional<std::size_t>> out(sims.size());
  for (std::size_t d = 0; d < sims.size(); ++d) {
    std::optional<std::size_t> best;
    for (std::size_t g = 0; g < gts.size(); ++g) {
      if (taken[g]) continue;
      const double s = sims[d][g];
      if (s < threshold) continue;
      if (!best || s > sims[d][*best] || (s == sims[d][*best] && gts[g].id < gts[*best].id)) {
        best = g;
      }
    }
    if (best) taken[*best] = true;
    out[d] = best;
  }
  return out;
}

struct ImageResult {
  std::vector<double> scores;                   // per kept detection, visiting order
  std::vector<std::vector<bool>> truePositive;  // [threshold][detection]
  std::size_t gtCount = 0;
};

ImageResult evaluateImage(std::span<const PersonInstance> preds,
                          std::span<const PersonInstance> gts, const MatchConfig& cfg) {
  ImageResult r;
  r.gtCount = gts.size();
  auto order = scoreOrder(preds);
  if (order.size() > cfg.maxDetections) order.resize(cfg.maxDetections);

  std::vector<std::vector<double>> sims(order.size(), std::vector<double>(gts.size(), 0.0));
  for (std::size_t d = 0; d < order.size(); ++d) {
    r.scores.push_back(*preds[order[d]].score);
    for (std::size_t g = 0; g < gts.size(); ++g) {
      sims[d][g] = similarity(preds[order[d]], gts[g], cfg.metricKind, cfg.oksParams);
    }
  }
  for (double t : cfg.thresholds) {
    const auto matched = assign(sims, gts, t);
    std::vector<bool> tp(matched.size());
    for (std::size_t d = 0; d < matched.size(); ++d) tp[d] = matched[d].has_value();
    r.truePositive.push_back(std::move(tp));
  }
  return r;
}

}  // namespace

std::vector<double> cocoThresholds() { return linspace(0.5, 0.95, 10); }

MatchConfig MatchConfig::keypoints() {
  MatchConfig cfg;
  cfg.thresholds = cocoThresholds();
  cfg.maxDetections = 20;
  cfg.metricKind = SimilarityKind::OKS;
  return cfg;
}

MatchConfig MatchConfig::boxes() {
  MatchConfig cfg;
  cfg.thresholds = cocoThresholds();
  cfg.maxDetections = 100;
  cfg.metricKind = SimilarityKind::IoU;
  return cfg;
}

MatchConfig MatchConfig::forKind(SimilarityKind kind) {
  return kind == SimilarityKind::IoU ? boxes() : keypoints();
}

void MatchConfig::validate() const {
  if (thresholds.empty()) throw Error(ErrorCode::InvalidConfig, "no thresholds");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    const double t = thresholds[i];
    if (!(t > 0.0 && t <= 1.0)) {
      throw Error(ErrorCode::InvalidConfig, fmt::format("threshold {} outside (0, 1]", t));
    }
    if (i > 0 && !(t > thresholds[i - 1])) {
      throw Error(ErrorCode::InvalidConfig, "thresholds must be strictly ascending");
    }
  }
  if (maxDetections == 0) throw Error(ErrorCode::InvalidConfig, "maxDetections must be positive");
  oksParams.validate();
}

std::vector<Match> matchGreedy(std::span<const PersonInstance> preds,
                               std::span<const PersonInstance> gts, double threshold,
                               SimilarityKind metricKind, const OksParams& oksParams) {
  const auto order = scoreOrder(preds);
  std::vector<std::vector<double>> sims(order.size(), std::vector<double>(gts.size(), 0.0));
  for (std::size_t d = 0; d < order.size(); ++d) {
    for (std::size_t g = 0; g < gts.size(); ++g) {
      sims[d][g] = similarity(preds[order[d]], gts[g], metricKind, oksParams);
    }
  }
  const auto matched = assign(sims, gts, threshold);
  std::vector<Match> out;
  out.reserve(order.size());
  for (std::size_t d = 0; d < order.size(); ++d) {
    Match m{preds[order[d]].id, std::nullopt};
    if (matched[d]) m.gtId = gts[*matched[d]].id;
    out.push_back(m);
  }
  return out;
}

ImageInstances groupByImage(std::span<const PersonInstance> instances) {
  ImageInstances out;
  for (const auto& p : instances) out[p.imageId].push_back(p);
  return out;
}

ImageInstances groundTruthByImage(const AnnotationDocument& doc) {
  ImageInstances out;
  for (const auto& img : doc.images) out[img.id];
  for (const auto& rec : doc.annotations) out[rec.imageId].push_back(rec.toInstance());
  return out;
}

EvalReport evaluate(const ImageInstances& preds, const ImageInstances& gts,
                    const MatchConfig& cfg) {
  cfg.validate();
  for (const auto& [imageId, list] : preds) {
    if (!list.empty() && !gts.contains(imageId)) {
      throw Error(ErrorCode::UnknownImage, fmt::format("predictions for unknown image {}", imageId));
    }
  }

  const std::size_t numThresholds = cfg.thresholds.size();
  std::vector<double> scores;
  std::vector<std::vector<bool>> tp(numThresholds);
  std::size_t totalGt = 0;

  static const std::vector<PersonInstance> kNone;
  for (const auto& [imageId, gtList] : gts) {
    std::vector<PersonInstance> usable;
    for (const auto& g : gtList) {
      if (cfg.metricKind == SimilarityKind::OKS && !g.hasLabeledPose()) continue;
      usable.push_back(g);
    }
    auto it = preds.find(imageId);
    const auto& predList = it == preds.end() ? kNone : it->second;
    ImageResult r = evaluateImage(predList, usable, cfg);
    totalGt += r.gtCount;
    scores.insert(scores.end(), r.scores.begin(), r.scores.end());
    for (std::size_t t = 0; t < numThresholds; ++t) {
      tp[t].insert(tp[t].end(), r.truePositive[t].begin(), r.truePositive[t].end());
    }
  }
  if (totalGt == 0) throw Error(ErrorCode::EmptyGroundTruth, "no ground-truth instances");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  EvalReport report;
  report.metricKind = cfg.metricKind;
  report.groundTruthCount = totalGt;
  report.detectionCount = scores.size();
  const auto& points = recallPoints();
  const double gtCount = static_cast<double>(totalGt);

  for (std::size_t t = 0; t < numThresholds; ++t) {
    const std::size_t n = order.size();
    std::vector<double> recall(n);
    std::vector<double> precision(n);
    double tpSum = 0.0;
    double fpSum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (tp[t][order[i]]) {
        tpSum += 1.0;
      } else {
        fpSum += 1.0;
      }
      recall[i] = tpSum / gtCount;
      precision[i] = tpSum / (tpSum + fpSum);
    }
    // Precision envelope: non-increasing from the right.
    for (std::size_t i = n; i-- > 1;) precision[i - 1] = std::max(precision[i - 1], precision[i]);

    PrCurve curve;
    curve.threshold = cfg.thresholds[t];
    curve.recall = points;
    curve.precision.resize(points.size(), 0.0);
    for (std::size_t r = 0; r < points.size(); ++r) {
      const auto pos = std::lower_bound(recall.begin(), recall.end(), points[r]);
      if (pos != recall.end()) curve.precision[r] = precision[pos - recall.begin()];
    }
    const double ap = std::accumulate(curve.precision.begin(), curve.precision.end(), 0.0) /
                      static_cast<double>(points.size());
    const double ar = n == 0 ? 0.0 : recall.back();
    report.perThreshold.push_back({cfg.thresholds[t], ap, ar});
    report.prCurves.push_back(std::move(curve));
  }

  double apSum = 0.0;
  double arSum = 0.0;
  for (const auto& r : report.perThreshold) {
    apSum += r.ap;
    arSum += r.ar;
  }
  report.mAP = apSum / static_cast<double>(numThresholds);
  report.mAR = arSum / static_cast<double>(numThresholds);
  return report;
}

std::string formatReportText(const EvalReport& report) {
  std::string out;
  for (const auto& r : report.perThreshold) {
    out += fmt::format("threshold={:.2f} AP={:.6f} AR={:.6f}\n", r.threshold, r.ap, r.ar);
  }
  out += fmt::format("summary kind={} thresholds={} mAP={:.6f} mAR={:.6f}\n",
                     similarityKindName(report.metricKind), report.perThreshold.size(), report.mAP,
                     report.mAR);
  return out;
}

std::string formatReportJson(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["kind"] = similarityKindName(report.metricKind);
  j["groundTruth"] = report.groundTruthCount;
  j["detections"] = report.detectionCount;
  j["mAP"] = report.mAP;
  j["mAR"] = report.mAR;
  auto& rows = j["perThreshold"] = nlohmann::ordered_json::array();
  for (const auto& r : report.perThreshold) {
    rows.push_back({{"threshold", r.threshold}, {"AP", r.ap}, {"AR", r.ar}});
  }
  auto& curves = j["prCurves"] = nlohmann::ordered_json::array();
  for (const auto& c : report.prCurves) {
    curves.push_back({{"threshold", c.threshold}, {"recall", c.recall}, {"precision", c.precision}});
  }
  return j.dump(2) + "\n";
}

}  // namespace poseforge
