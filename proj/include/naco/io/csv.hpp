#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace naco::io {

/// Splits comma-separated text into records. Double-quoted fields may contain
/// commas, doubled quotes and newlines. Throws SchemaError on an unterminated quote.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Quotes a field when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view value);
std::string csv_line(const std::vector<std::string>& fields);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);
std::optional<double> parse_number(std::string_view text);

std::string read_text_file(const std::string& path);
/// Writes through a temporary file and rename, so readers never see a partial file.
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace naco::io
