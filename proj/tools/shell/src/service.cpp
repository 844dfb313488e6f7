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
#include "poseforge/shell/service.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <csignal>
#include <ctime>
#include <mutex>
#include <optional>
#include <thread>

#include <pthread.h>

#include <fmt/format.h>
#include <httplib.h>
#include <spdlog/spdlog.h>

#include "poseforge/error.hpp"
#include "poseforge/index_io.hpp"
#include "poseforge/shell/responses.hpp"

namespace poseforge::shell {

namespace {

constexpr std::size_t kDefaultK = 5;
constexpr std::size_t kDefaultPageSize = 50;
constexpr std::size_t kMaxPageSize = 1000;
constexpr const char* kJsonType = "application/json";

spdlog::level::level_enum toSpdlog(LogLevel level) {
  switch (level) {
    case LogLevel::Trace: return spdlog::level::trace;
    case LogLevel::Debug: return spdlog::level::debug;
    case LogLevel::Info: return spdlog::level::info;
    case LogLevel::Warn: return spdlog::level::warn;
    case LogLevel::Error: return spdlog::level::err;
    case LogLevel::Off: return spdlog::level::off;
  }
  return spdlog::level::info;
}

std::size_t sizeParam(const httplib::Request& req, const char* name, std::size_t fallback) {
  if (!req.has_param(name)) return fallback;
  const std::string text = req.get_param_value(name);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("{} must be a non-negative integer", name));
  }
  return value;
}

std::size_t kParam(const httplib::Request& req) {
  const std::size_t k = sizeParam(req, "k", kDefaultK);
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  return k;
}

LabelMode modeParam(const httplib::Request& req) {
  return req.has_param("mode") ? parseLabelMode(req.get_param_value("mode"))
                               : LabelMode::Character;
}

}  // namespace

struct RetrievalService::Impl {
  std::shared_ptr<const RetrievalIndex> index;
  ServiceConfig cfg;
  httplib::Server server;
  int boundPort = -1;

  std::array<std::once_flag, 2> summaryOnce;
  std::array<std::optional<RetrievalSummary>, 2> summaries;

  const RetrievalSummary& summary(LabelMode mode) {
    const std::size_t slot = mode == LabelMode::Character ? 0 : 1;
    std::call_once(summaryOnce[slot], [&] { summaries[slot] = retrievalMap(*index, mode); });
    return *summaries[slot];
  }

  template <typename Fn>
  httplib::Server::Handler guarded(Fn fn) {
    return [fn = std::move(fn)](const httplib::Request& req, httplib::Response& res) {
      try {
        fn(req, res);
      } catch (const Error& e) {
        res.status = e.code() == ErrorCode::NotFound ? 404 : 400;
        res.set_content(errorBody(errorCodeName(e.code()), e.detail()), kJsonType);
      } catch (const std::exception& e) {
        res.status = 500;
        res.set_content(errorBody("Internal", e.what()), kJsonType);
      }
    };
  }

  void routes() {
    server.Get("/health", guarded([this](const httplib::Request&, httplib::Response& res) {
      res.set_content(healthBody(*index), kJsonType);
    }));

    server.Get("/entries", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::size_t offset = sizeParam(req, "offset", 0);
      const std::size_t limit = std::min(sizeParam(req, "limit", kDefaultPageSize), kMaxPageSize);
      res.set_content(entriesPageBody(*index, offset, limit), kJsonType);
    }));

    server.Get(R"(/entries/([^/]+))",
               guarded([this](const httplib::Request& req, httplib::Response& res) {
                 const std::string id = req.matches[1];
                 const IndexEntry* e = index->find(id);
                 if (!e) throw Error(ErrorCode::NotFound, fmt::format("person '{}'", id));
                 res.set_content(entryBody(*e), kJsonType);
               }));

    server.Get("/retrieve", guarded([this](const httplib::Request& req, httplib::Response& res) {
      if (!req.has_param("person")) {
        throw Error(ErrorCode::InvalidArgument, "missing 'person' parameter");
      }
      const std::string person = req.get_param_value("person");
      const std::size_t k = kParam(req);
      const LabelMode mode = modeParam(req);
      const auto results = index->queryById(person, k);
      res.set_content(retrievalBody(*index, person, mode, k, results), kJsonType);
    }));

    server.Post("/retrieve", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const PoseAnnotation pose = parsePoseText(req.body);
      const std::size_t k = kParam(req);
      const LabelMode mode = modeParam(req);
      double area = poseExtentArea(pose);
      if (req.has_param("area")) {
        const std::string text = req.get_param_value("area");
        char* end = nullptr;
        area = std::strtod(text.c_str(), &end);
        if (text.empty() || end != text.c_str() + text.size()) {
          throw Error(ErrorCode::InvalidArgument, "area must be a number");
        }
      }
      const auto results = index->query(pose, area, std::nullopt, k);
      res.set_content(retrievalBody(*index, std::nullopt, mode, k, results), kJsonType);
    }));

    server.Get("/metrics/retrieval",
               guarded([this](const httplib::Request& req, httplib::Response& res) {
                 res.set_content(summaryBody(summary(modeParam(req))), kJsonType);
               }));

    server.set_logger([](const httplib::Request& req, const httplib::Response& res) {
      spdlog::debug("{} {} -> {}", req.method, req.path, res.status);
    });

    if (cfg.staticAssetPath && !server.set_mount_point("/", cfg.staticAssetPath->string())) {
      spdlog::warn("static asset path '{}' is not a directory", cfg.staticAssetPath->string());
    }
  }
};

RetrievalService::RetrievalService(std::shared_ptr<const RetrievalIndex> index, ServiceConfig cfg)
    : impl_(std::make_unique<Impl>()) {
  impl_->index = std::move(index);
  impl_->cfg = std::move(cfg);
  spdlog::set_level(toSpdlog(impl_->cfg.logLevel));
  // Plain SO_REUSEADDR: SO_REUSEPORT would let a second server share a taken port.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  // Idle keep-alive connections each hold a worker, so size the pool well
  // above the core count.
  impl_->server.new_task_queue = [] {
    return new httplib::ThreadPool(std::max(64u, 4 * std::thread::hardware_concurrency()));
  };
  impl_->server.set_keep_alive_timeout(2);
  impl_->routes();
}

RetrievalService::~RetrievalService() {
  if (impl_->server.is_running()) impl_->server.stop();
}

void RetrievalService::bind() {
  if (!impl_->server.bind_to_port(impl_->cfg.host, impl_->cfg.port)) {
    throw Error(ErrorCode::BindError, fmt::format("cannot bind {}", impl_->cfg.listenAddress()));
  }
  impl_->boundPort = impl_->cfg.port;
}

int RetrievalService::bindEphemeral() {
  const int port = impl_->server.bind_to_any_port(impl_->cfg.host);
  if (port < 0) {
    throw Error(ErrorCode::BindError, fmt::format("cannot bind {}:0", impl_->cfg.host));
  }
  impl_->boundPort = port;
  return port;
}

void RetrievalService::run() {
  spdlog::info("serving {} entries on {}:{}", impl_->index->size(), impl_->cfg.host,
               impl_->boundPort);
  impl_->server.listen_after_bind();
}

void RetrievalService::stop() { impl_->server.stop(); }
bool RetrievalService::running() const { return impl_->server.is_running(); }
void RetrievalService::waitUntilReady() const { impl_->server.wait_until_ready(); }
int RetrievalService::port() const { return impl_->boundPort; }

int serveHttp(const ServiceConfig& cfg) {
  auto index = std::make_shared<const RetrievalIndex>(loadIndex(cfg.indexPath));

  // Signals are taken synchronously by a watcher thread; the server threads
  // inherit the blocked mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  RetrievalService service(index, cfg);
  service.bind();

  std::atomic<bool> done{false};
  std::thread watcher([&] {
    const timespec tick{0, 200'000'000};
    while (!done.load()) {
      if (sigtimedwait(&signals, nullptr, &tick) > 0) {
        spdlog::info("shutdown requested");
        service.stop();
        return;
      }
    }
  });
  service.run();
  done = true;
  watcher.join();
  pthread_sigmask(SIG_UNBLOCK, &signals, nullptr);
  return 0;
}

}  // namespace poseforge::shell
