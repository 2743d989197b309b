#include "itsforge/ohlc_csv.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "itsforge/text.hpp"

namespace itsforge {

namespace {

std::size_t find_column(const std::vector<std::string>& header, const std::string& name,
                        const std::string& source) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
        throw std::runtime_error(source + ": missing column '" + name + "' in header");
    return static_cast<std::size_t>(it - header.begin());
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace

std::vector<OhlcRecord> parse_ohlc_csv(const std::string& path, const OhlcColumnMap& columns) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_ohlc_csv(in, columns, path);
}

std::vector<OhlcRecord> parse_ohlc_csv(std::istream& in, const OhlcColumnMap& columns,
                                       const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(source_name + ": empty file (header row required)");
    const auto header = split_csv_line(line);
    const std::size_t c_date = find_column(header, columns.date, source_name);
    const std::size_t c_open = find_column(header, columns.open, source_name);
    const std::size_t c_high = find_column(header, columns.high, source_name);
    const std::size_t c_low = find_column(header, columns.low, source_name);
    const std::size_t c_close = find_column(header, columns.close, source_name);

    std::vector<OhlcRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line))
            continue;
        const std::string where = source_name + ":" + std::to_string(line_no);
        const auto fields = split_csv_line(line);
        if (fields.size() < header.size())
            throw std::runtime_error(where + ": expected " + std::to_string(header.size()) +
                                     " fields, got " + std::to_string(fields.size()));
        OhlcRecord r;
        try {
            r.date = Date::parse(fields[c_date]);
        } catch (const std::exception& e) {
            throw std::runtime_error(where + ": " + e.what());
        }
        r.open = parse_double(fields[c_open], where);
        r.high = parse_double(fields[c_high], where);
        r.low = parse_double(fields[c_low], where);
        r.close = parse_double(fields[c_close], where);
        if (r.low > r.high)
            throw std::runtime_error("validation error on " + r.date.to_string() +
                                     ": low " + fmt17(r.low) + " > high " + fmt17(r.high));
        if (r.low > std::min(r.open, r.close) || r.high < std::max(r.open, r.close))
            throw std::runtime_error("validation error on " + r.date.to_string() +
                                     ": open/close outside [low, high]");
        records.push_back(r);
    }

    std::stable_sort(records.begin(), records.end(),
                     [](const OhlcRecord& a, const OhlcRecord& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].date == records[i - 1].date)
            throw std::runtime_error(source_name + ": duplicate date " +
                                     records[i].date.to_string());
    }
    return records;
}

void write_ohlc_csv(const std::string& path, const std::vector<OhlcRecord>& records) {
    std::ostringstream out;
    out << "Date,Open,High,Low,Close\n";
    for (const auto& r : records) {
        out << r.date.to_string() << ',' << fmt17(r.open) << ',' << fmt17(r.high) << ','
            << fmt17(r.low) << ',' << fmt17(r.close) << '\n';
    }
    write_file_atomic(path, out.str());
}

void write_series_file(const std::string& path, const IntervalSeries& series) {
    std::ostringstream out;
    out << "# itsforge-series v1 scale=" << to_string(series.scale) << '\n';
    out << "date,lower,upper\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << series.dates[i].to_string() << ',' << fmt17(series.intervals[i].lower) << ','
            << fmt17(series.intervals[i].upper) << '\n';
    }
    write_file_atomic(path, out.str());
}

IntervalSeries read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line.rfind("# itsforge-series v1 scale=", 0) != 0)
        throw std::runtime_error(path + ": not an itsforge series file");
    IntervalSeries series;
    series.scale = scale_from_string(line.substr(line.rfind('=') + 1));
    if (!std::getline(in, line) || line != "date,lower,upper")
        throw std::runtime_error(path + ": missing series header row");
    std::size_t line_no = 2;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line))
            continue;
        const std::string where = path + ":" + std::to_string(line_no);
        const auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw std::runtime_error(where + ": expected 3 fields");
        series.dates.push_back(Date::parse(fields[0]));
        series.intervals.push_back(
            {parse_double(fields[1], where), parse_double(fields[2], where)});
    }
    for (std::size_t i = 1; i < series.dates.size(); ++i) {
        if (!(series.dates[i - 1] < series.dates[i]))
            throw std::runtime_error(path + ": dates not strictly increasing at " +
                                     series.dates[i].to_string());
    }
    return series;
}

} // namespace itsforge
