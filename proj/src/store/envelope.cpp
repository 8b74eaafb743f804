// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/store/envelope.hpp"

namespace irsim::store {

void to_json(Json& j, const EventEnvelope& e) {
  j = Json{{"globalSequence", e.globalSequence},
           {"aggregateId", e.aggregateId},
           {"aggregateVersion", e.aggregateVersion},
           {"eventType", e.eventType},
           {"simulationTime", e.simulationTime},
           {"payload", e.payload},
           {"isCdmEvent", e.isCdmEvent}};
}

void from_json(const Json& j, EventEnvelope& e) {
  e.globalSequence = requireField(j, "globalSequence").get<std::int64_t>();
  e.aggregateId = requireString(j, "aggregateId");
  e.aggregateVersion = requireField(j, "aggregateVersion").get<std::int64_t>();
  e.eventType = requireString(j, "eventType");
  e.simulationTime = requireField(j, "simulationTime").get<DateTime>();
  e.payload = requireField(j, "payload");
  e.isCdmEvent = requireField(j, "isCdmEvent").get<bool>();
}

}  // namespace irsim::store
