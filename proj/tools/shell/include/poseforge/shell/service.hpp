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

// Read-only HTTP front end over a loaded RetrievalIndex.
//
//   GET  /health
//   GET  /entries?offset=&limit=
//   GET  /entries/{id}
//   GET  /retrieve?person=&k=&mode=character|scene
//   POST /retrieve?k=&mode=&area=      body: 51 pose numbers
//   GET  /metrics/retrieval?mode=
//
// Handlers only read the shared index, so requests run concurrently.

#include <memory>

#include "poseforge/retrieval.hpp"
#include "poseforge/shell/config.hpp"

namespace poseforge::shell {

class RetrievalService {
 public:
  RetrievalService(std::shared_ptr<const RetrievalIndex> index, ServiceConfig cfg);
  ~RetrievalService();

  RetrievalService(const RetrievalService&) = delete;
  RetrievalService& operator=(const RetrievalService&) = delete;

  // Binds the configured address. Throws BindError.
  void bind();
  // Binds an OS-assigned port on the configured host and returns it.
  int bindEphemeral();
  // Serves until stop(); in-flight requests finish first.
  void run();
  void stop();
  bool running() const;
  void waitUntilReady() const;
  int port() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Loads the index, serves until SIGINT/SIGTERM, and returns an exit code.
// Throws CorruptIndex / IoError if the index cannot be loaded, BindError if
// the address is taken.
int serveHttp(const ServiceConfig& cfg);

}  // namespace poseforge::shell
