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

#include "finstudio/service.hpp"

#include <functional>
#include <stdexcept>

#include <httplib.h>

#include "finstudio/codec.hpp"
#include "finstudio/error.hpp"

namespace finstudio {

namespace {

using codec::Json;

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::unknown_ruleset:
    case ErrorCode::not_found: return 404;
    case ErrorCode::schema_violation: return 422;
    case ErrorCode::internal_error: return 500;
    default: return 400;
  }
}

HttpResult json_result(int status, const Json& doc) { return {status, "application/json", doc.dump()}; }

Json parse_body(std::string_view body) {
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("request body is not valid JSON: ") + e.what());
  }
}

}  // namespace

Service::Service(std::shared_ptr<const RuleSetRegistry> registry)
    : registry_(std::move(registry)) {}

HttpResult Service::handle(std::string_view method, std::string_view path,
                           std::string_view body) const {
  try {
    if (method == "GET" && path == "/healthz") return {200, "text/plain", "ok"};

    if (method == "GET" && path == "/api/v1/rulesets") {
      Json list = Json::array();
      for (const RuleSet* r : registry_->all()) {
        list.push_back({{"id", r->id},
                        {"currency", r->currency},
                        {"tax_brackets", r->tax.brackets.size()},
                        {"is_default", r->id == registry_->default_id()}});
      }
      return json_result(200, {{"default", registry_->default_id()}, {"rulesets", list}});
    }

    if (method == "POST") {
      if (path == "/api/v1/tax/assess") {
        const Json doc = parse_body(body);
        const RuleSet& rules = registry_->get(codec::requested_ruleset(doc));
        return json_result(200, codec::encode(assess_tax(codec::decode_tax_profile(doc), rules)));
      }
      if (path == "/api/v1/pension/compute") {
        const Json doc = parse_body(body);
        const RuleSet& rules = registry_->get(codec::requested_ruleset(doc));
        return json_result(200,
                           codec::encode(compute_pension(codec::decode_pension_input(doc), rules)));
      }
      if (path == "/api/v1/zakat/assess") {
        const Json doc = parse_body(body);
        const RuleSet& rules = registry_->get(codec::requested_ruleset(doc));
        return json_result(
            200, codec::encode(assess_zakat(codec::decode_zakat_declaration(doc), rules)));
      }
      if (path == "/api/v1/loan/compute") {
        return json_result(200, codec::encode(compute_loan(codec::decode_loan_input(parse_body(body)))));
      }
      if (path == "/api/v1/stats/summarize") {
        return json_result(
            200, codec::encode(summarize(codec::decode_coded_responses(parse_body(body)))));
      }
    }
    throw NotFound("no route for " + std::string(method) + " " + std::string(path));
  } catch (const Error& e) {
    return json_result(status_for(e.code()), codec::encode_error(e));
  } catch (const std::exception& e) {
    return json_result(500, codec::encode_error(InternalError(e.what())));
  }
}

void Service::mount(httplib::Server& server) const {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
    HttpResult result = handle(req.method, req.path, req.body);
    res.status = result.status;
    res.set_content(result.body, result.content_type);
  };
  server.Get(R"(/.*)", dispatch);
  server.Post(R"(/.*)", dispatch);
}

HttpServer::HttpServer(std::shared_ptr<const Service> service, ServerOptions options)
    : service_(std::move(service)),
      options_(std::move(options)),
      server_(std::make_unique<httplib::Server>()) {
  if (options_.static_dir && !server_->set_mount_point("/", options_.static_dir->string())) {
    throw std::runtime_error("static directory not found: " + options_.static_dir->string());
  }
  service_->mount(*server_);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  int port = options_.port;
  if (port == 0) {
    port = server_->bind_to_any_port(options_.host);
  } else if (!server_->bind_to_port(options_.host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw std::runtime_error("cannot listen on " + options_.host + ":" +
                             std::to_string(options_.port));
  }
  return port;
}

void HttpServer::serve() { server_->listen_after_bind(); }

void HttpServer::stop() {
  if (server_) server_->stop();
}

}  // namespace finstudio
