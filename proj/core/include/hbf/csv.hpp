#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hbf {

/// Quotes a field per RFC 4180 when it contains a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);

/// Shortest round-trip decimal form; identical bytes for identical doubles.
std::string format_number(double value);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept {
    return rows_;
  }
  /// Throws InvalidArgument if the row width differs from the header.
  void add_row(std::vector<std::string> row);

  /// CRLF-free output: header then rows, '\n' terminated.
  std::string to_string() const;
  /// Copy without the named columns (e.g. wall-clock timings).
  CsvTable without_columns(const std::vector<std::string>& names) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace hbf
