#pragma once

// Panel CSV reader. Contract: first row is a header, a `year` column holds
// contiguous calendar years, decimal point '.', no thousands separators.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "cointkit/errors.hpp"
#include "cointkit/series.hpp"

namespace cointkit {

struct CsvTable {
  std::vector<std::string> columns;  // header order, excluding `year`
  std::vector<int> years;
  std::map<std::string, std::vector<double>> values;

  bool has(const std::string& column) const { return values.count(column) > 0; }

  Series series(const std::string& column) const {
    const auto it = values.find(column);
    if (it == values.end()) throw Error(ErrorCode::MissingColumn, "missing column '" + column + "'");
    return Series(column, years, it->second);
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '"'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view field, T& out) {
  if (field.empty()) return false;
  if (field.front() == '+') field.remove_prefix(1);
  const auto res = std::from_chars(field.data(), field.data() + field.size(), out);
  return res.ec == std::errc() && res.ptr == field.data() + field.size();
}

}  // namespace detail

inline CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open '" + path.string() + "'");
  CsvTable table;
  std::string line;
  long line_no = 0;
  std::vector<std::string> header;
  std::size_t year_col = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_csv_line(line);
    if (header.empty()) {
      for (auto f : fields) header.emplace_back(f);
      bool found = false;
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "year") {
          year_col = i;
          found = true;
        } else {
          if (header[i].empty()) throw Error(ErrorCode::ParseError, "empty column name", line_no);
          if (table.values.count(header[i])) throw Error(ErrorCode::ParseError, "duplicate column '" + header[i] + "'", line_no);
          table.columns.push_back(header[i]);
          table.values[header[i]];
        }
      }
      if (!found) throw Error(ErrorCode::MissingColumn, "missing column 'year'");
      continue;
    }
    if (fields.size() != header.size())
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + " has " +
                                             std::to_string(fields.size()) + " fields, expected " +
                                             std::to_string(header.size()),
                  line_no);
    int year = 0;
    if (!detail::parse_number(fields[year_col], year))
      throw Error(ErrorCode::ParseError, "bad year on line " + std::to_string(line_no), line_no);
    if (!table.years.empty()) {
      if (year <= table.years.back())
        throw Error(ErrorCode::ParseError, "years not increasing on line " + std::to_string(line_no), line_no);
      if (year != table.years.back() + 1)
        throw Error(ErrorCode::YearGap, "year " + std::to_string(table.years.back() + 1) + " is missing",
                    table.years.back() + 1);
    }
    table.years.push_back(year);
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i == year_col) continue;
      double v = 0.0;
      if (!detail::parse_number(fields[i], v))
        throw Error(ErrorCode::ParseError,
                    "bad value '" + std::string(fields[i]) + "' on line " + std::to_string(line_no), line_no);
      table.values[header[i]].push_back(v);
    }
  }
  if (header.empty()) throw Error(ErrorCode::ParseError, "empty file", line_no);
  if (table.years.empty()) throw Error(ErrorCode::ParseError, "no data rows", line_no);
  return table;
}

}  // namespace cointkit
