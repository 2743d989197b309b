#include "itsforge/series.hpp"

#include <cmath>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace itsforge {

namespace {

int parse_int_field(const std::string& s, std::size_t pos, std::size_t len) {
    int value = 0;
    const char* first = s.data() + pos;
    const char* last = first + len;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::runtime_error("invalid date: '" + s + "'");
    return value;
}

} // namespace

Date Date::parse(const std::string& iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-')
        throw std::runtime_error("invalid date: '" + iso + "' (expected YYYY-MM-DD)");
    Date d;
    d.year = parse_int_field(iso, 0, 4);
    d.month = parse_int_field(iso, 5, 2);
    d.day = parse_int_field(iso, 8, 2);
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31)
        throw std::runtime_error("invalid date: '" + iso + "'");
    return d;
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

CenterRadius center_radius(const Interval& iv) {
    return {(iv.lower + iv.upper) / 2.0, (iv.upper - iv.lower) / 2.0};
}

Interval from_center_radius(const CenterRadius& cr) {
    return {cr.center - cr.radius, cr.center + cr.radius};
}

std::string to_string(Scale scale) {
    return scale == Scale::Log ? "log" : "raw";
}

Scale scale_from_string(const std::string& s) {
    if (s == "log") return Scale::Log;
    if (s == "raw") return Scale::Raw;
    throw std::runtime_error("unknown scale '" + s + "' (expected raw or log)");
}

IntervalSeries to_interval_series(const std::vector<OhlcRecord>& records, Scale scale) {
    IntervalSeries out;
    out.scale = scale;
    out.dates.reserve(records.size());
    out.intervals.reserve(records.size());
    for (const auto& r : records) {
        out.dates.push_back(r.date);
        if (scale == Scale::Log) {
            if (r.low <= 0.0 || r.high <= 0.0)
                throw std::domain_error("non-positive price on " + r.date.to_string() +
                                        " cannot be log-scaled");
            out.intervals.push_back({std::log(r.low), std::log(r.high)});
        } else {
            out.intervals.push_back({r.low, r.high});
        }
    }
    return out;
}

std::pair<IntervalSeries, IntervalSeries> split_estimation_holdout(const IntervalSeries& series) {
    const std::size_t n = series.size();
    if (n < 3)
        throw std::invalid_argument("series too short to split: n=" + std::to_string(n));
    const std::size_t n_est = (2 * n + 2) / 3; // ceil(2n/3)

    IntervalSeries estimation, holdout;
    estimation.scale = holdout.scale = series.scale;
    estimation.dates.assign(series.dates.begin(), series.dates.begin() + n_est);
    estimation.intervals.assign(series.intervals.begin(), series.intervals.begin() + n_est);
    holdout.dates.assign(series.dates.begin() + n_est, series.dates.end());
    holdout.intervals.assign(series.intervals.begin() + n_est, series.intervals.end());
    return {std::move(estimation), std::move(holdout)};
}

SupervisedDataset embed(const IntervalSeries& series, std::size_t lag_order) {
    const std::size_t n = series.size();
    if (lag_order < 1)
        throw std::invalid_argument("lag order must be >= 1");
    if (lag_order >= n)
        throw std::invalid_argument("lag order " + std::to_string(lag_order) +
                                    " too large for series of length " + std::to_string(n));

    SupervisedDataset ds;
    ds.inputs.reserve(n - lag_order);
    ds.targets.reserve(n - lag_order);
    ds.origin_indices.reserve(n - lag_order);
    for (std::size_t t = lag_order - 1; t + 1 < n; ++t) {
        std::vector<double> x;
        x.reserve(2 * lag_order);
        for (std::size_t lag = 0; lag < lag_order; ++lag) {
            const Interval& iv = series.intervals[t - lag];
            x.push_back(iv.lower);
            x.push_back(iv.upper);
        }
        const Interval& y = series.intervals[t + 1];
        ds.inputs.push_back(std::move(x));
        ds.targets.push_back({y.lower, y.upper});
        ds.origin_indices.push_back(t);
    }
    return ds;
}

} // namespace itsforge
