#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spinbeam/config.hpp"

namespace spinbeam {

/// Rows of optional numbers; an empty cell means "undefined".
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
};

/// 17 significant digits, so every value reparses to the same double.
/// Non-finite values are treated as undefined.
std::string format_number(double x);

/// Header row, then one line per row; undefined cells are empty.
void write_csv(std::ostream& out, const Table& table);

/// Array of objects keyed by column; undefined cells are null.
void write_json(std::ostream& out, const Table& table);

void write_table(std::ostream& out, const Table& table, Format format);

}  // namespace spinbeam
