#include "surprise/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <set>
#include <stdexcept>

namespace surprise::io {

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) {
    throw std::invalid_argument("csv header must name at least one column");
  }
  std::set<std::string> seen;
  for (const auto& name : header_) {
    if (!seen.insert(name).second) {
      throw std::invalid_argument("duplicate csv column '" + name + "'");
    }
  }
}

void CsvTable::add_row(std::vector<CsvCell> row) {
  if (row.size() != header_.size()) {
    throw std::invalid_argument("csv row has " + std::to_string(row.size()) +
                                " cells, header has " +
                                std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

std::string format_decimal(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  // snprintf honours LC_NUMERIC; undo a comma decimal separator if one is set.
  for (char* c = buffer; *c != '\0'; ++c) {
    if (*c == ',') *c = '.';
  }
  return buffer;
}

void write_csv(const CsvTable& table, std::ostream& out) {
  const auto line = [&out](const auto& cells, auto render) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << ',';
      out << render(cells[i]);
    }
    out << '\n';
  };
  line(table.header(), [](const std::string& s) { return s; });
  for (const auto& row : table.rows()) {
    line(row, [](const CsvCell& cell) {
      if (const double* d = std::get_if<double>(&cell)) return format_decimal(*d);
      return std::get<std::string>(cell);
    });
  }
}

void emit_csv(const CsvTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error(path.string() + ": " + std::strerror(errno));
  }
  write_csv(table, out);
  out.flush();
  if (!out) {
    throw std::runtime_error(path.string() + ": write failed");
  }
}

}  // namespace surprise::io
