#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "itsforge/series.hpp"

namespace itsforge {

// Maps the required logical columns onto a vendor's header names. Extra
// columns in the file are ignored.
struct OhlcColumnMap {
    std::string date = "Date";
    std::string open = "Open";
    std::string high = "High";
    std::string low = "Low";
    std::string close = "Close";
};

// Reads a header-first OHLC CSV: ISO-8601 dates, plain decimal numbers,
// UTF-8, no quoting. Records are returned sorted by date ascending;
// duplicate dates, malformed rows (error names the line number) and
// low/high violations (error names the date) are rejected.
std::vector<OhlcRecord> parse_ohlc_csv(const std::string& path, const OhlcColumnMap& columns = {});
std::vector<OhlcRecord> parse_ohlc_csv(std::istream& in, const OhlcColumnMap& columns,
                                       const std::string& source_name);

void write_ohlc_csv(const std::string& path, const std::vector<OhlcRecord>& records);

// Validated interval-series file, the output of `ingest`:
//   # itsforge-series v1 scale=<raw|log>
//   date,lower,upper
//   <ISO date>,<17-digit lower>,<17-digit upper>
void write_series_file(const std::string& path, const IntervalSeries& series);
IntervalSeries read_series_file(const std::string& path);

} // namespace itsforge
