#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "itsforge/series.hpp"

namespace itsforge {

struct TradingParams {
    std::size_t k = 1;       // consecutive confirmation days, >= 1
    std::size_t horizon = 1; // forecast horizon behind the signals
    double cost = 0.001;     // one-time round-trip deduction, as a fraction
};

// Buy when the predicted interval midpoint lies strictly above the open:
// pred_high - open > open - pred_low. All inputs on the same (raw) scale.
bool buy_signal(double pred_low, double pred_high, double open);

// Mirror with strict "<"; the midpoint-equal case yields neither signal.
bool sell_signal(double pred_low, double pred_high, double open);

struct Trade {
    std::size_t buy_day = 0;  // window day index of the buy execution
    std::size_t sell_day = 0; // window day index of the sell execution
    double buy_close = 0.0;
    double sell_close = 0.0;
    double r_percent = 0.0;  // net percent return, cost already deducted
    double ar_percent = 0.0; // (r / holding days) * 365
};

struct TradeLedger {
    std::vector<Trade> trades; // chronological, non-overlapping
    bool open_position_discarded = false;
};

struct DayForecast {
    double pred_low = 0.0;
    double pred_high = 0.0;
};

// Runs the confirmation state machine over an evaluation window.
// forecasts[t] is the horizon-ahead interval formed on day t and is compared
// against day t's open; a buy executes at the close of day t+k-1 after k
// consecutive buy-signal days starting at t, a sell symmetrically, and any
// non-signal day resets the count. A position still open at the end of the
// window is discarded from returns and flagged.
TradeLedger simulate(std::span<const OhlcRecord> prices, std::span<const DayForecast> forecasts,
                     const TradingParams& params);

struct TradeSummary {
    double average_ar_percent = 0.0;
    double positive_percent = 0.0; // share of closed trades with AR > 0
    std::size_t trade_count = 0;
};

// Absent when the ledger holds no closed trades.
std::optional<TradeSummary> summarize(const TradeLedger& ledger);

} // namespace itsforge
