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

#include "poseforge/adain.hpp"

namespace {

poseforge::FeatureTensor randomTensor(std::size_t c, std::size_t hw, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0, 1);
  std::vector<double> data(c * hw * hw);
  for (auto& v : data) v = n(rng);
  return poseforge::FeatureTensor(c, hw, hw, std::move(data));
}

void BM_Adain(benchmark::State& state) {
  const auto content = randomTensor(state.range(0), 32, 1);
  const auto style = randomTensor(state.range(0), 32, 2);
  for (auto _ : state) benchmark::DoNotOptimize(poseforge::stylize(content, style, 0.5));
  state.SetBytesProcessed(state.iterations() * content.size() * sizeof(double));
}
BENCHMARK(BM_Adain)->Arg(64)->Arg(512);

void BM_SampleAlpha(benchmark::State& state) {
  poseforge::StyleConfig cfg;
  cfg.alphaMode = poseforge::UniformAlpha{};
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(poseforge::sampleAlpha(cfg, i++));
}
BENCHMARK(BM_SampleAlpha);

}  // namespace
