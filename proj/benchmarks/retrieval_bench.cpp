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
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "poseforge/retrieval.hpp"

namespace {

poseforge::RetrievalIndex makeIndex(std::size_t n) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 400);
  std::vector<poseforge::IndexEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> raw(poseforge::kPoseValues);
    for (std::size_t j = 0; j < poseforge::kNumJoints; ++j) {
      raw[3 * j] = u(rng);
      raw[3 * j + 1] = u(rng);
      raw[3 * j + 2] = 2;
    }
    poseforge::IndexEntry e;
    e.personId = std::to_string(i);
    e.pose = poseforge::normalizePose(raw);
    e.area = 8000;
    e.character = "c" + std::to_string(i % 15);
    e.scene = "s" + std::to_string(i % 5);
    entries.push_back(std::move(e));
  }
  return poseforge::RetrievalIndex::build(std::move(entries));
}

void BM_QueryTop5(benchmark::State& state) {
  const auto index = makeIndex(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(index.queryById(index.entries()[i % index.size()].personId, 5));
    ++i;
  }
}
BENCHMARK(BM_QueryTop5)->Arg(303)->Arg(10000);

void BM_RetrievalMap(benchmark::State& state) {
  const auto index = makeIndex(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(poseforge::retrievalMap(index, poseforge::LabelMode::Character));
  }
}
BENCHMARK(BM_RetrievalMap)->Arg(303)->Unit(benchmark::kMillisecond);

}  // namespace
