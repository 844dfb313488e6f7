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

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "poseforge/annotations.hpp"
#include "poseforge/retrieval.hpp"
#include "poseforge/tensor.hpp"

namespace poseforge::testing {

using Rng = std::mt19937_64;

// Canonical pose inside [x0, x0+w] x [y0, y0+h]; each joint labeled with
// probability `labeledFraction`, at least one always labeled.
RawPose randomRawPose(Rng& rng, double x0, double y0, double w, double h,
                      double labeledFraction = 0.8);

PoseAnnotation toPose(const RawPose& raw);
RawPose toRaw(const PoseAnnotation& pose);

FeatureTensor randomTensor(Rng& rng, std::size_t c, std::size_t h, std::size_t w,
                           double lo = -3.0, double hi = 3.0);

std::vector<double> toVector(const FeatureTensor& t);

// Valid document with random images, annotations, categories and extra
// fields. Numbers are exactly representable so text round trips are exact.
AnnotationDocument randomDocument(Rng& rng);

// One random byte- or token-level edit of `text`.
std::string mutate(const std::string& text, Rng& rng);

// 20 entries over 4 labels with a few duplicated poses to force score ties.
std::vector<OracleEntry> syntheticRetrievalSet(Rng& rng, std::size_t n = 20,
                                               std::size_t labels = 4);
std::vector<IndexEntry> toIndexEntries(const std::vector<OracleEntry>& entries);

}  // namespace poseforge::testing
