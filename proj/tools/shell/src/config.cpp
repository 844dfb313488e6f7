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
#include "poseforge/shell/config.hpp"

#include <charconv>
#include <map>
#include <tuple>

#include <fmt/format.h>

#include "poseforge/error.hpp"
#include "poseforge/keyvalue.hpp"

namespace poseforge::shell {

LogLevel parseLogLevel(std::string_view name) {
  if (name == "trace") return LogLevel::Trace;
  if (name == "debug") return LogLevel::Debug;
  if (name == "info") return LogLevel::Info;
  if (name == "warn") return LogLevel::Warn;
  if (name == "error") return LogLevel::Error;
  if (name == "off") return LogLevel::Off;
  throw Error(ErrorCode::InvalidConfig, fmt::format("unknown log level '{}'", name));
}

std::string_view logLevelName(LogLevel level) {
  switch (level) {
    case LogLevel::Trace: return "trace";
    case LogLevel::Debug: return "debug";
    case LogLevel::Info: return "info";
    case LogLevel::Warn: return "warn";
    case LogLevel::Error: return "error";
    case LogLevel::Off: return "off";
  }
  return "info";
}

std::string ServiceConfig::listenAddress() const { return fmt::format("{}:{}", host, port); }

std::pair<std::string, std::uint16_t> parseListenAddress(std::string_view address) {
  const auto colon = address.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw Error(ErrorCode::InvalidConfig, fmt::format("expected host:port, got '{}'", address));
  }
  const std::string_view portText = address.substr(colon + 1);
  unsigned long port = 0;
  auto [ptr, ec] = std::from_chars(portText.data(), portText.data() + portText.size(), port);
  if (ec != std::errc() || ptr != portText.data() + portText.size() || port < 1 || port > 65535) {
    throw Error(ErrorCode::InvalidConfig, fmt::format("port '{}' outside 1..65535", portText));
  }
  return {std::string(address.substr(0, colon)), static_cast<std::uint16_t>(port)};
}

ServiceConfig parseServiceConfig(std::string_view text, ServiceConfig base) {
  std::map<std::string, std::string> kv;
  try {
    kv = parseKeyValue(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidConfig, e.detail());
  }
  for (const auto& [key, value] : kv) {
    if (key == "listen_address") {
      std::tie(base.host, base.port) = parseListenAddress(value);
    } else if (key == "index_path") {
      base.indexPath = value;
    } else if (key == "static_asset_path") {
      if (value.empty()) {
        base.staticAssetPath.reset();
      } else {
        base.staticAssetPath = value;
      }
    } else if (key == "log_level") {
      base.logLevel = parseLogLevel(value);
    } else {
      throw Error(ErrorCode::InvalidConfig, fmt::format("unknown config key '{}'", key));
    }
  }
  return base;
}

ServiceConfig loadServiceConfig(const std::filesystem::path& path, ServiceConfig base) {
  return parseServiceConfig(readFile(path), std::move(base));
}

void applyEnvironment(ServiceConfig& cfg, const EnvLookup& lookup) {
  if (const char* index = lookup("POSEFORGE_INDEX"); index && *index) cfg.indexPath = index;
  if (const char* addr = lookup("POSEFORGE_ADDR"); addr && *addr) {
    std::tie(cfg.host, cfg.port) = parseListenAddress(addr);
  }
}

}  // namespace poseforge::shell
