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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace poseforge::shell {

enum class LogLevel { Trace, Debug, Info, Warn, Error, Off };

LogLevel parseLogLevel(std::string_view name);
std::string_view logLevelName(LogLevel level);

struct ServiceConfig {
  std::string host = "127.0.0.1";
  std::uint16_t port = 8080;  // 1..65535
  std::filesystem::path indexPath;
  std::optional<std::filesystem::path> staticAssetPath;
  LogLevel logLevel = LogLevel::Info;

  std::string listenAddress() const;
};

// "host:port" with port in [1, 65535]. Throws InvalidConfig.
std::pair<std::string, std::uint16_t> parseListenAddress(std::string_view address);

// key=value file. Keys: listen_address, index_path, static_asset_path,
// log_level. Throws InvalidConfig on unknown keys or bad values.
ServiceConfig parseServiceConfig(std::string_view text, ServiceConfig base = {});
ServiceConfig loadServiceConfig(const std::filesystem::path& path, ServiceConfig base = {});

using EnvLookup = std::function<const char*(const char*)>;

// POSEFORGE_INDEX and POSEFORGE_ADDR override the corresponding fields.
void applyEnvironment(ServiceConfig& cfg, const EnvLookup& lookup);

}  // namespace poseforge::shell
