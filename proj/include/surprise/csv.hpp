#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace surprise::io {

using CsvCell = std::variant<double, std::string>;

/// Rectangular table with unique column names. Numbers are written with 17
/// significant digits so that they read back as the same binary64 value.
class CsvTable {
 public:
  /// Throws std::invalid_argument for an empty or duplicated header.
  explicit CsvTable(std::vector<std::string> header);

  /// Throws std::invalid_argument if the width does not match the header.
  void add_row(std::vector<CsvCell> row);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<CsvCell>>& rows() const { return rows_; }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<CsvCell>> rows_;
};

/// "%.17g" with '.' as decimal separator regardless of the global locale.
std::string format_decimal(double value);

void write_csv(const CsvTable& table, std::ostream& out);

/// Writes the table to `path`; throws std::runtime_error carrying the system
/// error text when the file cannot be written.
void emit_csv(const CsvTable& table, const std::filesystem::path& path);

}  // namespace surprise::io
