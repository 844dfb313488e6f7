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
#include <vector>

#include <benchmark/benchmark.h>

#include "poseforge/similarity.hpp"

namespace {

std::vector<poseforge::PoseAnnotation> randomPoses(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 400);
  std::vector<poseforge::PoseAnnotation> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> raw(poseforge::kPoseValues);
    for (std::size_t j = 0; j < poseforge::kNumJoints; ++j) {
      raw[3 * j] = u(rng);
      raw[3 * j + 1] = u(rng);
      raw[3 * j + 2] = 2;
    }
    out.push_back(poseforge::normalizePose(raw));
  }
  return out;
}

void BM_Oks(benchmark::State& state) {
  const auto poses = randomPoses(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(poseforge::oks(poses[i % 256], poses[(i + 1) % 256], 5000.0));
    ++i;
  }
}
BENCHMARK(BM_Oks);

void BM_Iou(benchmark::State& state) {
  const poseforge::BoundingBox a{0, 0, 10, 10}, b{5, 3, 12, 9};
  for (auto _ : state) benchmark::DoNotOptimize(poseforge::iou(a, b));
}
BENCHMARK(BM_Iou);

}  // namespace
