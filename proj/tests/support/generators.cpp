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
#include "generators.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace poseforge::testing {

namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Multiples of 1/8 print and parse exactly.
double dyadic(Rng& rng, double lo, double hi) { return std::round(uniform(rng, lo, hi) * 8) / 8; }

std::string randomWord(Rng& rng) {
  static const char* kWords[] = {"amphora", "krater", "lekythos", "kylix", "hydria", "pelike",
                                 "stamnos", "oinochoe", "psykter", "dinos"};
  return kWords[uniformInt(rng, 0, 9)];
}

nlohmann::json randomExtra(Rng& rng) {
  nlohmann::json extra = nlohmann::json::object();
  const int n = uniformInt(rng, 0, 2);
  for (int i = 0; i < n; ++i) {
    const std::string key = "x_" + randomWord(rng);
    switch (uniformInt(rng, 0, 3)) {
      case 0: extra[key] = uniformInt(rng, -100, 100); break;
      case 1: extra[key] = randomWord(rng); break;
      case 2: extra[key] = nlohmann::json::array({1, "two", nullptr}); break;
      default: extra[key] = {{"nested", randomWord(rng)}}; break;
    }
  }
  return extra;
}

}  // namespace

RawPose randomRawPose(Rng& rng, double x0, double y0, double w, double h,
                      double labeledFraction) {
  RawPose raw{};
  bool any = false;
  for (int j = 0; j < 17; ++j) {
    if (uniform(rng, 0, 1) < labeledFraction) {
      raw[3 * j] = uniform(rng, x0, x0 + w);
      raw[3 * j + 1] = uniform(rng, y0, y0 + h);
      raw[3 * j + 2] = uniformInt(rng, 1, 2);
      any = true;
    }
  }
  if (!any) {
    raw[0] = x0 + w / 2;
    raw[1] = y0 + h / 2;
    raw[2] = 2;
  }
  return raw;
}

PoseAnnotation toPose(const RawPose& raw) { return normalizePose(raw); }

RawPose toRaw(const PoseAnnotation& pose) {
  const auto enc = encodePose(pose);
  RawPose raw{};
  std::copy(enc.begin(), enc.end(), raw.begin());
  return raw;
}

FeatureTensor randomTensor(Rng& rng, std::size_t c, std::size_t h, std::size_t w, double lo,
                           double hi) {
  std::vector<double> data(c * h * w);
  for (auto& v : data) v = uniform(rng, lo, hi);
  return FeatureTensor(c, h, w, std::move(data));
}

std::vector<double> toVector(const FeatureTensor& t) {
  return {t.data().begin(), t.data().end()};
}

AnnotationDocument randomDocument(Rng& rng) {
  AnnotationDocument doc;
  const int numImages = uniformInt(rng, 1, 6);
  std::int64_t nextAnn = uniformInt(rng, 1, 1000);
  for (int i = 0; i < numImages; ++i) {
    ImageHeader img;
    img.id = 10 * i + uniformInt(rng, 0, 9);
    img.width = uniformInt(rng, 32, 2048);
    img.height = uniformInt(rng, 32, 2048);
    img.fileName = fmt::format("{}_{}.jpg", randomWord(rng), img.id);
    img.extra = randomExtra(rng);
    doc.images.push_back(img);

    const int persons = uniformInt(rng, 0, 4);
    for (int p = 0; p < persons; ++p) {
      AnnotationRecord rec;
      rec.id = nextAnn++;
      rec.imageId = img.id;
      rec.bbox = {dyadic(rng, 0, img.width / 2.0), dyadic(rng, 0, img.height / 2.0),
                  dyadic(rng, 1, img.width / 2.0), dyadic(rng, 1, img.height / 2.0)};
      rec.area = dyadic(rng, 1, rec.bbox.area());
      if (uniformInt(rng, 0, 3) > 0) {
        RawPose raw = randomRawPose(rng, rec.bbox.x, rec.bbox.y, rec.bbox.w, rec.bbox.h,
                                    uniform(rng, 0.0, 1.0));
        for (int j = 0; j < 17; ++j) {
          if (raw[3 * j + 2] == 0) continue;
          raw[3 * j] = std::round(raw[3 * j] * 8) / 8;
          raw[3 * j + 1] = std::round(raw[3 * j + 1] * 8) / 8;
        }
        if (uniformInt(rng, 0, 4) == 0) raw.fill(0.0);
        rec.pose = toPose(raw);
      }
      if (uniformInt(rng, 0, 2) == 0) rec.score = std::round(uniform(rng, 0, 1) * 1024) / 1024;
      rec.extra = randomExtra(rng);
      doc.annotations.push_back(rec);
    }
  }
  if (uniformInt(rng, 0, 1) == 0) doc.categories.push_back(cocoPersonCategory());
  doc.extra = randomExtra(rng);
  return doc;
}

std::string mutate(const std::string& text, Rng& rng) {
  std::string s = text;
  if (s.empty()) return "{";
  const auto pos = [&] { return static_cast<std::size_t>(uniformInt(rng, 0, static_cast<int>(s.size()) - 1)); };
  static const char* kTokens[] = {"null", "-1", "1e309", "NaN", "\"\"", "[]", "{}", "true",
                                  "0", "3", "\"x\"", ",", ":", "]", "}", "\"id\":", "1e-400",
                                  "-0", "99999999999999999999", "\"\\u0000\""};
  switch (uniformInt(rng, 0, 6)) {
    case 0:  // flip one byte
      s[pos()] = static_cast<char>(uniformInt(rng, 0, 255));
      break;
    case 1:  // delete a span
    {
      const std::size_t p = pos();
      s.erase(p, static_cast<std::size_t>(uniformInt(rng, 1, 16)));
      break;
    }
    case 2:  // truncate
      s.resize(pos());
      break;
    case 3:  // insert a token
      s.insert(pos(), kTokens[uniformInt(rng, 0, 19)]);
      break;
    case 4:  // replace a number with a token
    {
      const std::size_t p = s.find_first_of("0123456789", pos());
      if (p == std::string::npos) break;
      std::size_t e = p;
      while (e < s.size() && (std::isdigit(static_cast<unsigned char>(s[e])) || s[e] == '.')) ++e;
      s.replace(p, e - p, kTokens[uniformInt(rng, 0, 19)]);
      break;
    }
    case 5:  // duplicate a span
    {
      const std::size_t p = pos();
      const std::string span = s.substr(p, static_cast<std::size_t>(uniformInt(rng, 1, 64)));
      s.insert(pos(), span);
      break;
    }
    default:  // drop a quoted key
    {
      const std::size_t p = s.find('"', pos());
      if (p == std::string::npos) break;
      const std::size_t q = s.find('"', p + 1);
      if (q == std::string::npos) break;
      s.erase(p, q - p + 1);
      break;
    }
  }
  return s;
}

std::vector<OracleEntry> syntheticRetrievalSet(Rng& rng, std::size_t n, std::size_t labels) {
  std::vector<OracleEntry> out;
  for (std::size_t i = 0; i < n; ++i) {
    OracleEntry e;
    e.id = fmt::format("p{:02d}", i + 1);
    e.label = fmt::format("label{}", i % labels);
    // a shared anchor per label keeps same-label poses close
    const double ox = 40.0 * static_cast<double>(i % labels);
    e.pose = randomRawPose(rng, ox, 0.0, 60.0, 120.0, 0.85);
    e.area = uniform(rng, 3000.0, 9000.0);
    out.push_back(e);
  }
  // exact duplicates tie every score against them
  out[7].pose = out[3].pose;
  out[7].area = out[3].area;
  out[15].pose = out[11].pose;
  return out;
}

std::vector<IndexEntry> toIndexEntries(const std::vector<OracleEntry>& entries) {
  std::vector<IndexEntry> out;
  for (const auto& e : entries) {
    IndexEntry ie;
    ie.personId = e.id;
    ie.pose = toPose(e.pose);
    ie.area = e.area;
    ie.character = e.label;
    ie.scene = e.label == "label0" || e.label == "label1" ? "sceneA" : "sceneB";
    out.push_back(ie);
  }
  return out;
}

}  // namespace poseforge::testing
