#include "spinbeam/output.hpp"

#include <cmath>
#include <cstdio>

namespace spinbeam {

namespace {

void write_cell(std::ostream& out, const std::optional<double>& cell, const char* missing) {
  if (cell && std::isfinite(*cell)) {
    out << format_number(*cell);
  } else {
    out << missing;
  }
}

}  // namespace

std::string format_number(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      write_cell(out, row[c], "");
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  out << '[';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << '{';
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? ", " : "") << '"' << table.columns[c] << "\": ";
      write_cell(out, table.rows[r][c], "null");
    }
    out << '}';
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

void write_table(std::ostream& out, const Table& table, Format format) {
  if (format == Format::Csv) {
    write_csv(out, table);
  } else {
    write_json(out, table);
  }
}

}  // namespace spinbeam
