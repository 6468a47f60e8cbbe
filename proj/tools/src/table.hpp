#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace bernheight::cli {

/// Exact values travel as "p/q" strings; doubles only where the value is inherently real.
using Cell = std::variant<std::string, std::int64_t, double, bool>;

struct Table {
  /// Key/value pairs written ahead of the header (e.g. the seed of a randomized run).
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  friend bool operator==(const Table&, const Table&) = default;
};

/// Shortest representation that round-trips.
std::string format_double(double v);

/// Meta pairs become a leading "# key=value ..." comment line, then the header and rows.
std::string to_csv(const Table& t);

/// One JSON object per line: an optional {"meta": {...}} line, then one object per row
/// with keys in column order.
std::string to_jsonl(const Table& t);

/// Inverse of to_jsonl. Throws std::invalid_argument on malformed input.
Table parse_jsonl(std::string_view text);

}  // namespace bernheight::cli
