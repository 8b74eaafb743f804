// Copyright 2026 The irsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "irsim/cdm/types.hpp"
#include "irsim/harness/simulator.hpp"

namespace irsim::testing {

struct SwapTerms {
  std::string tradeId = "T-1";
  std::string party1 = "P-1";
  std::string party2 = "P-2";
  Date tradeDate{2024, 1, 10};
  Date effective{2024, 1, 15};
  Date termination{2025, 1, 15};
  std::string notional = "10000000";
  std::string currency = "USD";
  std::string fixedRate = "0.02";
  std::string spread = "0";
  std::string index = "SIM-IBOR";
  int tenorMonths = 3;
  cdm::PaymentFrequency fixedFrequency = cdm::PaymentFrequency::Quarterly;
  cdm::PaymentFrequency floatingFrequency = cdm::PaymentFrequency::Quarterly;
  cdm::DayCountConvention fixedDayCount = cdm::DayCountConvention::Act360;
  cdm::DayCountConvention floatingDayCount = cdm::DayCountConvention::Act360;
  cdm::BusinessDayConvention bdc = cdm::BusinessDayConvention::ModifiedFollowing;
  cdm::BusinessCalendar calendar = cdm::BusinessCalendar::WeekendsOnly;
};

inline cdm::InterestRatePayout fixedPayout(const SwapTerms& t) {
  return cdm::InterestRatePayout{
      t.party1, t.party2, Decimal::parse(t.notional), t.currency,
      cdm::FixedRate{Decimal::parse(t.fixedRate)}, t.fixedDayCount,
      cdm::CalculationPeriodDates{t.effective, t.termination, t.fixedFrequency, t.bdc, t.calendar}};
}

inline cdm::InterestRatePayout floatingPayout(const SwapTerms& t) {
  return cdm::InterestRatePayout{
      t.party2, t.party1, Decimal::parse(t.notional), t.currency,
      cdm::FloatingRate{t.index, t.tenorMonths, Decimal::parse(t.spread)}, t.floatingDayCount,
      cdm::CalculationPeriodDates{t.effective, t.termination, t.floatingFrequency, t.bdc, t.calendar}};
}

/// Party1 pays fixed, Party2 pays floating.
inline cdm::Trade makeSwap(const SwapTerms& t = {}) {
  cdm::Trade trade;
  trade.tradeId = t.tradeId;
  trade.tradeDate = t.tradeDate;
  trade.tradableProduct.product.payouts = {fixedPayout(t), floatingPayout(t)};
  trade.tradableProduct.counterparties = {cdm::Counterparty{t.party1, cdm::CounterpartyRole::Party1},
                                          cdm::Counterparty{t.party2, cdm::CounterpartyRole::Party2}};
  return trade;
}

/// In-memory simulator with two registered parties (P-1, P-2) and a clock
/// at 2024-01-10T00:00.
struct SimFixture {
  harness::Simulator sim;
  cdm::PartyId p1;
  cdm::PartyId p2;

  explicit SimFixture(std::uint64_t seed = 42) : sim(harness::SimulatorOptions{seed}) {
    p1 = sim.registry().createParty("Bank A", "LEI-A").partyId;
    p2 = sim.registry().createParty("Bank B", "LEI-B").partyId;
    sim.clock().createClock(DateTime(Date(2024, 1, 10)));
  }

  SwapTerms terms(const std::string& tradeId = "T-1") const {
    SwapTerms t;
    t.tradeId = tradeId;
    t.party1 = p1;
    t.party2 = p2;
    return t;
  }
};

}  // namespace irsim::testing
