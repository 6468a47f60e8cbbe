#include "table.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bernheight::cli {

using ordered_json = nlohmann::ordered_json;

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width does not match the header");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return std::to_string(v);
        }
      },
      c);
}

}  // namespace

std::string to_csv(const Table& t) {
  std::ostringstream out;
  if (!t.meta.empty()) {
    out << '#';
    for (const auto& [k, v] : t.meta) out << ' ' << k << '=' << v;
    out << '\n';
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(t.columns[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_field(cell_text(row[i]));
    }
    out << '\n';
  }
  return out.str();
}

std::string to_jsonl(const Table& t) {
  std::ostringstream out;
  if (!t.meta.empty()) {
    ordered_json m = ordered_json::object();
    for (const auto& [k, v] : t.meta) m[k] = v;
    out << ordered_json{{"meta", m}}.dump() << '\n';
  }
  for (const auto& row : t.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
    }
    out << obj.dump() << '\n';
  }
  return out.str();
}

Table parse_jsonl(std::string_view text) {
  Table t;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ordered_json obj;
    try {
      obj = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed JSON line: ") + e.what());
    }
    if (!obj.is_object()) throw std::invalid_argument("each line must be a JSON object");
    if (first && obj.size() == 1 && obj.contains("meta")) {
      for (const auto& [k, v] : obj["meta"].items()) t.meta.emplace_back(k, v.get<std::string>());
      first = false;
      continue;
    }
    std::vector<std::string> keys;
    std::vector<Cell> row;
    for (const auto& [k, v] : obj.items()) {
      keys.push_back(k);
      if (v.is_string()) {
        row.emplace_back(v.get<std::string>());
      } else if (v.is_boolean()) {
        row.emplace_back(v.get<bool>());
      } else if (v.is_number_integer()) {
        row.emplace_back(v.get<std::int64_t>());
      } else if (v.is_number_float()) {
        row.emplace_back(v.get<double>());
      } else {
        throw std::invalid_argument("unsupported JSON value for key " + k);
      }
    }
    if (t.columns.empty()) {
      t.columns = keys;
    } else if (keys != t.columns) {
      throw std::invalid_argument("rows disagree on their keys");
    }
    t.rows.push_back(std::move(row));
    first = false;
  }
  return t;
}

}  // namespace bernheight::cli
