// Copyright 2026 The Financial Studio Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "finstudio/registry.hpp"

namespace httplib {
class Server;
}

namespace finstudio {

struct HttpResult {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// JSON API over the engines:
///
///   POST /api/v1/tax/assess        POST /api/v1/pension/compute
///   POST /api/v1/zakat/assess      POST /api/v1/loan/compute
///   POST /api/v1/stats/summarize   GET  /api/v1/rulesets
///   GET  /healthz
///
/// Engine errors map to 400, unknown rule-set ids to 404 and schema
/// violations to 422, each with an {"error": {...}} body. The only state is
/// the registry, which is never mutated.
class Service {
 public:
  explicit Service(std::shared_ptr<const RuleSetRegistry> registry);

  /// Transport-independent request handling.
  HttpResult handle(std::string_view method, std::string_view path, std::string_view body) const;

  /// Registers the routes (plus permissive CORS) on `server`.
  void mount(httplib::Server& server) const;

  const RuleSetRegistry& registry() const { return *registry_; }

 private:
  std::shared_ptr<const RuleSetRegistry> registry_;
};

struct ServerOptions {
  std::string host = "0.0.0.0";
  int port = 8080;  ///< 0 picks a free port
  /// Optional directory of static web assets served at "/".
  std::optional<std::filesystem::path> static_dir;
};

/// Owns an HTTP listener bound to a Service.
class HttpServer {
 public:
  HttpServer(std::shared_ptr<const Service> service, ServerOptions options);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket and returns the bound port. Throws std::runtime_error
  /// when binding fails.
  int bind();

  /// Serves until stop(); call after bind().
  void serve();

  /// Thread-safe; makes serve() return.
  void stop();

 private:
  std::shared_ptr<const Service> service_;
  ServerOptions options_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace finstudio
