// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "irsim/cdm/json.hpp"
#include "irsim/harness/simulator.hpp"

namespace httplib {
class Server;
}

namespace irsim::api {

struct ApiRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  /// Null for an empty body.
  Json body;
  std::map<std::string, std::string> headers;
};

struct ApiOptions {
  bool cors = true;
  std::string corsOrigin = "*";
};

/// One row of the endpoint reference.
struct RouteDoc {
  std::string method;
  std::string path;
  std::string summary;
  std::string request;
  std::string response;
};

/// Machine-readable code carried by error bodies, e.g. "INVALID_TRANSITION".
std::string apiErrorCode(ErrorCode code);
/// 400 for validation and precondition failures, 404 when the target does
/// not exist, 409 for conflicts with the current state.
int httpStatus(ErrorCode code);

/// HTTP/JSON boundary over a Simulator. It holds no state of its own:
/// every request is a thin call into the command or query side, made under
/// one lock so that requests never interleave inside the simulator.
class ApiGateway {
 public:
  explicit ApiGateway(harness::Simulator& sim, ApiOptions options = {});

  ApiResponse handle(const ApiRequest& request);

  /// Routes every request of the server through handle().
  void mount(httplib::Server& server);

  static const std::vector<RouteDoc>& routes();
  /// The endpoint reference as markdown.
  static std::string routesMarkdown();

 private:
  ApiResponse dispatch(const ApiRequest& request);

  harness::Simulator& sim_;
  ApiOptions options_;
  std::mutex mutex_;
};

}  // namespace irsim::api
