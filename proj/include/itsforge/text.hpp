#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace itsforge {

// Shortest decimal form that round-trips an IEEE double exactly ("%.17g"
// trimmed by the printf rounding rules).
std::string fmt17(double v);

double parse_double(const std::string& field, const std::string& context);

std::vector<std::string> split_csv_line(const std::string& line);

// Writes to <path>.tmp then renames, so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

// FNV-1a, used for config and model fingerprints.
std::uint64_t fnv1a(const std::string& data);

} // namespace itsforge
