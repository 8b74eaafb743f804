// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <httplib.h>

#include "irsim/api/gateway.hpp"

namespace irsim::api {

void ApiGateway::mount(httplib::Server& server) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    ApiRequest request{req.method, req.path, {}, req.body};
    for (const auto& [key, value] : req.params) request.query.emplace(key, value);
    const ApiResponse response = handle(request);
    res.status = response.status;
    for (const auto& [key, value] : response.headers) res.set_header(key, value);
    if (!response.body.is_null()) res.set_content(response.body.dump(), "application/json");
  };
  const std::string any = ".*";
  server.Get(any, handler);
  server.Post(any, handler);
  server.Put(any, handler);
  server.Delete(any, handler);
  server.Options(any, handler);
}

}  // namespace irsim::api
