// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

// irsim: serve the simulator over HTTP, run the reference scenario, or
// inspect an event log.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <httplib.h>

#include "irsim/api/gateway.hpp"
#include "irsim/harness/scenario.hpp"
#include "irsim/store/event_store.hpp"

namespace {

using namespace irsim;

httplib::Server* gServer = nullptr;

void stopServer(int) {
  if (gServer != nullptr) gServer->stop();
}

harness::StorageKind storageKind(const std::string& name) {
  return name == "file" ? harness::StorageKind::File : harness::StorageKind::Memory;
}

void printLog(const store::EventStore& store, std::ostream& out) {
  for (const auto& e : store.readAll()) out << Json(e).dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Event-sourced interest rate swap post-trade simulator"};
  app.require_subcommand(1);

  std::string storage = "memory";
  std::string dataDir = "data";
  std::uint64_t seed = 42;

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  int port = 8080;
  std::string host = "0.0.0.0";
  bool noCors = false;
  serve->add_option("--port", port, "Listen port")->envname("IRSIM_PORT");
  serve->add_option("--host", host, "Listen address")->envname("IRSIM_HOST");
  serve->add_option("--data-dir", dataDir, "Directory for events.log and parties.json")
      ->envname("IRSIM_DATA_DIR");
  serve->add_option("--seed", seed, "Rate fixing seed")->envname("IRSIM_SEED");
  serve->add_option("--storage", storage, "Event store backend")
      ->check(CLI::IsMember({"memory", "file"}))
      ->envname("IRSIM_STORAGE");
  serve->add_flag("--no-cors", noCors, "Do not send CORS headers");

  auto* scenario = app.add_subcommand("scenario", "Run the reference swap to maturity and print the event log");
  std::string outPath;
  scenario->add_option("--seed", seed, "Rate fixing seed");
  scenario->add_option("--storage", storage)->check(CLI::IsMember({"memory", "file"}));
  scenario->add_option("--data-dir", dataDir);
  scenario->add_option("--out", outPath, "Write the log here instead of stdout");

  auto* dump = app.add_subcommand("dump-log", "Print a file-backed event log as JSON lines");
  std::string logPath;
  dump->add_option("path", logPath, "Path to events.log")->required()->check(CLI::ExistingFile);

  auto* routes = app.add_subcommand("routes", "Print the HTTP endpoint reference as markdown");
  std::string routesOut;
  routes->add_option("--out", routesOut, "Write to this file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (serve->parsed()) {
      harness::Simulator sim({seed, storageKind(storage), dataDir});
      api::ApiGateway gateway(sim, api::ApiOptions{!noCors, "*"});
      httplib::Server server;
      gateway.mount(server);
      gServer = &server;
      std::signal(SIGINT, stopServer);
      std::signal(SIGTERM, stopServer);
      std::cerr << "irsim listening on " << host << ':' << port << " (storage " << storage
                << ", seed " << seed << ")\n";
      if (!server.listen(host, port)) {
        std::cerr << "irsim: cannot listen on " << host << ':' << port << '\n';
        return 1;
      }
      return 0;
    }
    if (scenario->parsed()) {
      harness::Simulator sim({seed, storageKind(storage), dataDir});
      harness::runReferenceScenario(sim);
      if (outPath.empty()) {
        printLog(sim.store(), std::cout);
      } else {
        std::ofstream out(outPath);
        printLog(sim.store(), out);
      }
      return 0;
    }
    if (dump->parsed()) {
      store::EventStore store(store::makeFileBackend(logPath));
      printLog(store, std::cout);
      return 0;
    }
    if (routes->parsed()) {
      const std::string text = api::ApiGateway::routesMarkdown();
      if (routesOut.empty()) {
        std::cout << text;
      } else {
        std::ofstream(routesOut) << text;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "irsim: " << errorCodeName(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}
