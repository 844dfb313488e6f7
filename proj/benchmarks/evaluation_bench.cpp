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
#include <random>

#include <benchmark/benchmark.h>

#include "poseforge/evaluation.hpp"

namespace {

// `images` images with 5 ground-truth persons and 8 detections each.
std::pair<poseforge::ImageInstances, poseforge::ImageInstances> makeSet(int images) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 500), jitter(-6, 6), score(0, 1);
  poseforge::ImageInstances gts, preds;
  std::int64_t id = 1;
  for (int img = 0; img < images; ++img) {
    for (int p = 0; p < 5; ++p) {
      std::vector<double> raw(poseforge::kPoseValues), det(poseforge::kPoseValues);
      const double x0 = u(rng), y0 = u(rng);
      for (std::size_t j = 0; j < poseforge::kNumJoints; ++j) {
        raw[3 * j] = x0 + u(rng) / 5;
        raw[3 * j + 1] = y0 + u(rng) / 3;
        raw[3 * j + 2] = 2;
        det[3 * j] = raw[3 * j] + jitter(rng);
        det[3 * j + 1] = raw[3 * j + 1] + jitter(rng);
        det[3 * j + 2] = 2;
      }
      poseforge::PersonInstance g;
      g.id = id++;
      g.imageId = img;
      g.pose = poseforge::normalizePose(raw);
      g.area = 9000;
      gts[img].push_back(g);
      poseforge::PersonInstance d = g;
      d.id = id++;
      d.pose = poseforge::normalizePose(det);
      d.score = score(rng);
      preds[img].push_back(d);
    }
    for (int f = 0; f < 3; ++f) {
      poseforge::PersonInstance d = gts[img][f];
      d.id = id++;
      d.score = score(rng) / 2;
      std::vector<double> raw(poseforge::kPoseValues);
      for (std::size_t j = 0; j < poseforge::kNumJoints; ++j) {
        raw[3 * j] = u(rng);
        raw[3 * j + 1] = u(rng);
        raw[3 * j + 2] = 2;
      }
      d.pose = poseforge::normalizePose(raw);
      preds[img].push_back(d);
    }
  }
  return {preds, gts};
}

void BM_EvaluateKeypoints(benchmark::State& state) {
  const auto [preds, gts] = makeSet(static_cast<int>(state.range(0)));
  const auto cfg = poseforge::MatchConfig::keypoints();
  for (auto _ : state) benchmark::DoNotOptimize(poseforge::evaluate(preds, gts, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvaluateKeypoints)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
