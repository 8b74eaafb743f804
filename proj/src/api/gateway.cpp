// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/api/gateway.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "irsim/lifecycle/json.hpp"
#include "irsim/query/views.hpp"

namespace irsim::api {
namespace {

/// Raised for requests the gateway itself cannot make sense of.
struct BadRequest {
  std::string code;
  std::string message;
  int status = 400;
};

ApiResponse json(int status, Json body) { return ApiResponse{status, std::move(body), {}}; }

ApiResponse errorResponse(int status, const std::string& code, const std::string& message) {
  return json(status, Json{{"code", code}, {"message", message}});
}

std::vector<std::string> segments(const std::string& path) {
  std::vector<std::string> out;
  std::stringstream in(path);
  std::string part;
  while (std::getline(in, part, '/')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

Json parseBody(const ApiRequest& request, bool required) {
  if (request.body.empty()) {
    if (required) throw BadRequest{"BAD_REQUEST", "a JSON body is required"};
    return Json::object();
  }
  try {
    return Json::parse(request.body);
  } catch (const Json::parse_error& e) {
    throw BadRequest{"BAD_REQUEST", std::string("malformed JSON: ") + e.what()};
  }
}

std::optional<std::string> queryParam(const ApiRequest& request, const std::string& key) {
  const auto it = request.query.find(key);
  if (it == request.query.end()) return std::nullopt;
  return it->second;
}

std::size_t parseLimit(const std::string& text) {
  long long value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value < 1) {
    throw Error(ErrorCode::InvalidArgument, "limit must be a positive integer");
  }
  return static_cast<std::size_t>(value);
}

bool parseBool(const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw Error(ErrorCode::InvalidArgument, "expected true or false, got '" + text + "'");
}

void requireOk(const store::CommandResult& result) {
  if (!result.ok) throw Error(result.error.value_or(ErrorCode::InvalidArgument), result.reason);
}

Json clockJson(const harness::SimulationClock& clock) {
  const auto snap = clock.snapshot();
  if (!snap) throw Error(ErrorCode::NoClock, "no clock has been created for this simulation");
  return Json{{"clockId", snap->clockId}, {"currentTime", snap->currentTime}};
}

Json reportJson(const harness::TriggerReport& report) {
  return Json{{"currentTime", report.currentTime},
              {"breachedDeadlines", report.breachedDeadlines}};
}

DateTime timeField(const Json& body, const char* key) {
  return requireField(body, key).get<DateTime>();
}

}  // namespace

std::string apiErrorCode(ErrorCode code) { return std::string(errorCodeName(code)); }

int httpStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFound:
    case ErrorCode::NoClock:
      return 404;
    case ErrorCode::DuplicateTrade:
    case ErrorCode::ConcurrencyConflict:
    case ErrorCode::AlreadyExists:
    case ErrorCode::AlreadyReset:
    case ErrorCode::AlreadyPaid:
    case ErrorCode::DuplicateLei:
    case ErrorCode::PartyInUse:
    case ErrorCode::NothingScheduled:
    case ErrorCode::DuplicateHandler:
      return 409;
    case ErrorCode::StorageFailure:
      return 500;
    default:
      return 400;
  }
}

ApiGateway::ApiGateway(harness::Simulator& sim, ApiOptions options)
    : sim_(sim), options_(std::move(options)) {}

ApiResponse ApiGateway::handle(const ApiRequest& request) {
  ApiResponse response;
  if (request.method == "OPTIONS") {
    response = ApiResponse{200, nullptr, {}};
  } else {
    std::lock_guard lock(mutex_);
    try {
      response = dispatch(request);
    } catch (const BadRequest& e) {
      response = errorResponse(e.status, e.code, e.message);
    } catch (const Error& e) {
      response = errorResponse(httpStatus(e.code()), apiErrorCode(e.code()), e.what());
    } catch (const Json::exception& e) {
      response = errorResponse(400, apiErrorCode(ErrorCode::InvalidArgument), e.what());
    }
  }
  if (options_.cors) {
    response.headers["Access-Control-Allow-Origin"] = options_.corsOrigin;
    response.headers["Access-Control-Allow-Methods"] = "GET, POST, PUT, DELETE, OPTIONS";
    response.headers["Access-Control-Allow-Headers"] = "Content-Type";
  }
  return response;
}

ApiResponse ApiGateway::dispatch(const ApiRequest& request) {
  const auto seg = segments(request.path);
  const std::string& m = request.method;
  const auto n = seg.size();
  auto at = [&](std::size_t i, const char* s) { return n > i && seg[i] == s; };

  if (n == 2 && at(0, "simulation") && at(1, "reset") && m == "POST") {
    const Json body = parseBody(request, false);
    std::optional<std::uint64_t> seed;
    if (body.contains("seed")) seed = body.at("seed").get<std::uint64_t>();
    sim_.resetSimulation(seed);
    return json(200, Json{{"seed", sim_.seed()}});
  }

  if (at(0, "clock")) {
    auto& clock = sim_.clock();
    if (n == 1 && m == "GET") return json(200, clockJson(clock));
    if (n == 1 && m == "POST") {
      clock.createClock(timeField(parseBody(request, true), "initialTime"));
      return json(201, clockJson(clock));
    }
    if (n == 2 && m == "POST" && seg[1] == "advance") {
      return json(200, reportJson(sim_.scheduler().advanceTo(timeField(parseBody(request, true), "time"))));
    }
    if (n == 2 && m == "POST" && seg[1] == "forward") {
      return json(200, reportJson(sim_.scheduler().advanceToNextDeadline()));
    }
    if (n == 2 && m == "POST" && seg[1] == "play") {
      clock.getTime();
      return json(200, reportJson(sim_.scheduler().play()));
    }
  }

  if (at(0, "parties")) {
    auto& registry = sim_.registry();
    if (n == 1 && m == "GET") return json(200, registry.listParties());
    if (n == 1 && m == "POST") {
      const Json body = parseBody(request, true);
      return json(201, registry.createParty(requireString(body, "name"),
                                            body.value("legalEntityId", std::string{})));
    }
    if (n == 2 && m == "GET") return json(200, registry.getParty(seg[1]));
    if (n == 2 && m == "PUT") {
      const Json body = parseBody(request, true);
      return json(200, registry.updateParty(seg[1], requireString(body, "name"),
                                            body.value("legalEntityId", std::string{})));
    }
    if (n == 2 && m == "DELETE") {
      registry.deleteParty(seg[1]);
      return json(200, Json{{"deleted", seg[1]}});
    }
  }

  if (at(0, "trades")) {
    if (n == 1 && m == "GET") return json(200, sim_.projector().queryBlotter());
    if (n == 1 && m == "POST") {
      const Json body = parseBody(request, true);
      cdm::Trade trade;
      try {
        trade = (body.is_object() && body.contains("trade") ? body.at("trade") : body).get<cdm::Trade>();
      } catch (const Error& e) {
        throw Error(ErrorCode::InvalidTrade, std::string("trade body is invalid: ") + e.what());
      } catch (const Json::exception& e) {
        throw Error(ErrorCode::InvalidTrade, std::string("trade body is invalid: ") + e.what());
      }
      requireOk(sim_.fmi().submitExecution(trade));
      return json(201, sim_.projector().queryTrade(trade.tradeId));
    }
    if (n == 2 && m == "GET") return json(200, sim_.projector().queryTrade(seg[1]));
    if (n == 3 && m == "POST" && seg[2] == "consent") {
      const Json body = parseBody(request, true);
      const auto decision = requireEnum<fmi::ConsentDecision>(body, "decision");
      requireOk(sim_.fmi().consent(seg[1], decision));
      return json(200, sim_.projector().queryTrade(seg[1]));
    }
  }

  if (n == 1 && at(0, "events") && m == "GET") {
    const auto limit = queryParam(request, "limit");
    const auto cdmOnly = queryParam(request, "cdmOnly");
    return json(200, sim_.projector().queryEventStream(limit ? parseLimit(*limit) : 25,
                                                       cdmOnly ? parseBool(*cdmOnly) : false));
  }

  if (n == 2 && at(0, "deadlines") && at(1, "next") && m == "GET") {
    return json(200, sim_.projector().queryNextDeadline());
  }

  throw BadRequest{apiErrorCode(ErrorCode::NotFound), "no route for " + m + " " + request.path, 404};
}

const std::vector<RouteDoc>& ApiGateway::routes() {
  static const std::vector<RouteDoc> kRoutes = {
      {"POST", "/simulation/reset", "Start a new run. Erases the event log; keeps parties.",
       "optional {seed}", "{seed}"},
      {"POST", "/clock", "Create the run's clock.", "{initialTime}", "201 {clockId, currentTime}"},
      {"GET", "/clock", "Current simulation time.", "", "{clockId, currentTime}"},
      {"POST", "/clock/advance", "Move the clock to a time, breaching due deadlines.", "{time}",
       "{currentTime, breachedDeadlines}"},
      {"POST", "/clock/forward", "Advance to the next open deadline.", "",
       "{currentTime, breachedDeadlines}"},
      {"POST", "/clock/play", "Advance until no deadline is open.", "",
       "{currentTime, breachedDeadlines}"},
      {"GET", "/parties", "List registered parties.", "", "[Party]"},
      {"POST", "/parties", "Register a party.", "{name, legalEntityId}", "201 Party"},
      {"GET", "/parties/{id}", "Fetch one party.", "", "Party"},
      {"PUT", "/parties/{id}", "Update a party.", "{name, legalEntityId}", "Party"},
      {"DELETE", "/parties/{id}", "Remove a party not used by a live trade.", "", "{deleted}"},
      {"POST", "/trades", "Submit an execution.", "{trade} or a bare Trade", "201 BlotterRow"},
      {"GET", "/trades", "The blotter.", "", "[BlotterRow]"},
      {"GET", "/trades/{id}", "One blotter row.", "", "BlotterRow"},
      {"POST", "/trades/{id}/consent", "Confirm or reject an executed trade.",
       "{decision: CONFIRM or REJECT}", "BlotterRow"},
      {"GET", "/events", "Latest events, newest first.", "query: limit (default 25), cdmOnly",
       "[EventStreamRow]"},
      {"GET", "/deadlines/next", "Earliest open deadline.", "", "{deadline?: {name, dueTime, ...}}"},
  };
  return kRoutes;
}

std::string ApiGateway::routesMarkdown() {
  std::ostringstream out;
  out << "# HTTP API\n\n"
      << "All bodies are JSON. Errors use `{code, message}` with status 400 (validation or\n"
      << "precondition), 404 (missing target or no clock), 409 (conflict with current state)\n"
      << "or 500 (storage failure). Every response carries CORS headers unless the server\n"
      << "runs with --no-cors.\n\n"
      << "| Method | Path | Summary | Request | Response |\n"
      << "|---|---|---|---|---|\n";
  for (const auto& r : routes()) {
    out << "| " << r.method << " | `" << r.path << "` | " << r.summary << " | " << r.request
        << " | " << r.response << " |\n";
  }
  return out.str();
}

}  // namespace irsim::api
