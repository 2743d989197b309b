#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace itsforge {

// Calendar day. Only ordering and formatting are supported; no calendar
// arithmetic.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    static Date parse(const std::string& iso); // strict YYYY-MM-DD
    std::string to_string() const;

    auto operator<=>(const Date&) const = default;
};

// A [lower, upper] pair. Observed data satisfies lower <= upper; model
// predictions may violate it and are kept as-is.
struct Interval {
    double lower = 0.0;
    double upper = 0.0;

    bool operator==(const Interval&) const = default;
};

struct CenterRadius {
    double center = 0.0;
    double radius = 0.0;
};

CenterRadius center_radius(const Interval& iv);
Interval from_center_radius(const CenterRadius& cr);

// One day of open/high/low/close prices, validated at ingestion:
// low <= min(open, close) and high >= max(open, close).
struct OhlcRecord {
    Date date;
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
};

enum class Scale { Raw, Log };

std::string to_string(Scale scale);
Scale scale_from_string(const std::string& s);

// Timestamped interval sequence. Dates are strictly increasing and
// |dates| == |intervals|. Immutable by convention after construction.
struct IntervalSeries {
    std::vector<Date> dates;
    std::vector<Interval> intervals;
    Scale scale = Scale::Raw;

    std::size_t size() const { return intervals.size(); }
};

// Interval t becomes [ln(low_t), ln(high_t)] under Scale::Log (natural log),
// or [low_t, high_t] unchanged under Scale::Raw. Non-positive prices under
// Log throw std::domain_error.
IntervalSeries to_interval_series(const std::vector<OhlcRecord>& records, Scale scale);

// First ceil(2n/3) observations go to the estimation sample, the rest to the
// hold-out sample. Requires n >= 3.
std::pair<IntervalSeries, IntervalSeries> split_estimation_holdout(const IntervalSeries& series);

// Lag embedding of an interval series into supervised pairs.
//
// Input i is laid out lag-major, lower-before-upper:
//   [X_t^L, X_t^U, X_{t-1}^L, X_{t-1}^U, ..., X_{t-d+1}^L, X_{t-d+1}^U]
// and the target is [X_{t+1}^L, X_{t+1}^U]. origin_indices[i] holds t, the
// series index of the most recent observation in input i.
struct SupervisedDataset {
    std::vector<std::vector<double>> inputs;
    std::vector<std::vector<double>> targets;
    std::vector<std::size_t> origin_indices;

    std::size_t size() const { return inputs.size(); }
    std::size_t input_dim() const { return inputs.empty() ? 0 : inputs.front().size(); }
    std::size_t output_dim() const { return targets.empty() ? 0 : targets.front().size(); }
};

// Produces n - d pairs for a series of n intervals. Requires n > d >= 1.
SupervisedDataset embed(const IntervalSeries& series, std::size_t lag_order);

} // namespace itsforge
