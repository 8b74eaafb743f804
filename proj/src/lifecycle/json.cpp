// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/lifecycle/json.hpp"

namespace irsim::lifecycle {

void to_json(Json& j, const Deadline& v) {
  j = Json{{"deadlineId", v.deadlineId},
           {"tradeId", v.tradeId},
           {"dueTime", v.dueTime},
           {"kind", v.kind},
           {"periodIndex", v.periodIndex},
           {"status", v.status}};
}

void from_json(const Json& j, Deadline& v) {
  v.deadlineId = requireString(j, "deadlineId");
  v.tradeId = requireString(j, "tradeId");
  v.dueTime = requireField(j, "dueTime").get<DateTime>();
  v.kind = requireEnum<DeadlineKind>(j, "kind");
  v.periodIndex = requireField(j, "periodIndex").get<int>();
  v.status = requireEnum<DeadlineStatus>(j, "status");
}

void to_json(Json& j, const Observation& v) {
  j = Json{{"index", v.index},
           {"tenorMonths", v.tenorMonths},
           {"observationDate", v.observationDate},
           {"rate", v.rate}};
}

void from_json(const Json& j, Observation& v) {
  v.index = requireString(j, "index");
  v.tenorMonths = requireField(j, "tenorMonths").get<int>();
  v.observationDate = requireField(j, "observationDate").get<Date>();
  v.rate = requireField(j, "rate").get<Decimal>();
}

void to_json(Json& j, const CalculationPeriod& v) {
  j = Json{{"unadjustedStart", v.unadjustedStart},
           {"unadjustedEnd", v.unadjustedEnd},
           {"adjustedStart", v.adjustedStart},
           {"adjustedEnd", v.adjustedEnd},
           {"paymentDate", v.paymentDate},
           {"periodIndex", v.periodIndex}};
}

}  // namespace irsim::lifecycle
