// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "irsim/harness/scenario.hpp"

namespace irsim::harness {
namespace {

cdm::PartyId ensureParty(network::PartyRegistry& registry, const std::string& name,
                         const std::string& lei) {
  for (const auto& p : registry.listParties()) {
    if (p.legalEntityId == lei) return p.partyId;
  }
  return registry.createParty(name, lei).partyId;
}

void require(const store::CommandResult& result, const char* step) {
  if (!result.ok) {
    throw Error(result.error.value_or(ErrorCode::InvalidArgument),
                std::string(step) + ": " + result.reason);
  }
}

}  // namespace

cdm::Trade referenceSwap(const cdm::TradeId& tradeId, const cdm::PartyId& fixedPayer,
                         const cdm::PartyId& floatingPayer) {
  const cdm::CalculationPeriodDates dates{Date(2024, 1, 15), Date(2025, 1, 15),
                                          cdm::PaymentFrequency::Quarterly,
                                          cdm::BusinessDayConvention::ModifiedFollowing,
                                          cdm::BusinessCalendar::WeekendsOnly};
  const Decimal notional = Decimal::fromInt(10'000'000);
  cdm::InterestRatePayout fixed{fixedPayer,  floatingPayer,
                                notional,    "USD",
                                cdm::FixedRate{Decimal::parse("0.02")},
                                cdm::DayCountConvention::Act360,
                                dates};
  cdm::InterestRatePayout floating{floatingPayer, fixedPayer,
                                   notional,      "USD",
                                   cdm::FloatingRate{"SIM-IBOR", 3, Decimal{}},
                                   cdm::DayCountConvention::Act360,
                                   dates};
  cdm::Trade trade;
  trade.tradeId = tradeId;
  trade.tradeDate = Date(2024, 1, 10);
  trade.tradableProduct.product.payouts = {fixed, floating};
  trade.tradableProduct.counterparties = {
      cdm::Counterparty{fixedPayer, cdm::CounterpartyRole::Party1},
      cdm::Counterparty{floatingPayer, cdm::CounterpartyRole::Party2}};
  return trade;
}

ScenarioResult runReferenceScenario(Simulator& sim) {
  sim.resetSimulation();
  ScenarioResult result;
  result.party1 = ensureParty(sim.registry(), "Bank A", "LEI-BANK-A");
  result.party2 = ensureParty(sim.registry(), "Bank B", "LEI-BANK-B");
  sim.clock().createClock(DateTime(Date(2024, 1, 10)));
  result.tradeId = "IRS-1";
  require(sim.fmi().submitExecution(referenceSwap(result.tradeId, result.party1, result.party2)),
          "submit");
  require(sim.fmi().consent(result.tradeId, fmi::ConsentDecision::Confirm), "confirm");
  result.report = sim.scheduler().play();
  return result;
}

}  // namespace irsim::harness
