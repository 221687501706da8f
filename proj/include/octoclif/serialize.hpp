// Copyright 2026 The octoclif Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "octoclif/clifford.hpp"
#include "octoclif/int_matrix.hpp"
#include "octoclif/matrix_rep.hpp"

namespace octoclif {

// Matrix text formats.
//
//   json:  {"label", "algebra", "side", "index": [..], "dimension", "rows": [[..], ..]}
//   csv:   n lines of n comma-separated integers
//   plain: n lines of right-aligned integers

enum class Format { Json, Csv, Plain };

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "plain") return Format::Plain;
  throw std::invalid_argument("unknown format: " + std::string(s));
}

inline nlohmann::json rows_json(const IntMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.order(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.order(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json to_json(const LabeledMatrix& m) {
  return nlohmann::json{{"label", m.label},          {"algebra", std::string(name(m.algebra))},
                        {"side", m.side},            {"index", m.indices},
                        {"dimension", m.matrix.order()}, {"rows", rows_json(m.matrix)}};
}

inline IntMatrix matrix_from_json(const nlohmann::json& j) {
  const auto& rows = j.at("rows");
  const std::size_t n = rows.size();
  if (j.contains("dimension") && j.at("dimension").get<std::size_t>() != n)
    throw std::invalid_argument("matrix json: dimension does not match row count");
  IntMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw std::invalid_argument("matrix json: non-square rows");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c].get<std::int64_t>();
  }
  return m;
}

inline LabeledMatrix labeled_from_json(const nlohmann::json& j) {
  return LabeledMatrix{j.at("label").get<std::string>(), parse_algebra(j.at("algebra").get<std::string>()),
                       j.at("side").get<std::string>(), j.at("index").get<std::vector<int>>(), matrix_from_json(j)};
}

inline std::string to_csv(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.order(); ++r) {
    for (std::size_t c = 0; c < m.order(); ++c) os << (c ? "," : "") << m(r, c);
    os << '\n';
  }
  return os.str();
}

inline std::string to_plain(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.order(); ++r) {
    for (std::size_t c = 0; c < m.order(); ++c) os << (c ? " " : "") << std::setw(3) << m(r, c);
    os << '\n';
  }
  return os.str();
}

inline IntMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::int64_t> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stoll(cell));
    rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw std::invalid_argument("matrix csv: non-square rows");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

inline nlohmann::json to_json(const CliffordReport& rep) {
  nlohmann::json j{{"set_name", rep.set_name},
                   {"generator_count", rep.generator_count},
                   {"pairs_checked", rep.pairs_checked},
                   {"metric", rep.metric},
                   {"pass", rep.pass},
                   {"first_failure", nullptr}};
  if (rep.first_failure)
    j["first_failure"] = {{"a", rep.first_failure->a},
                          {"b", rep.first_failure->b},
                          {"matrix_diff", rows_json(rep.first_failure->matrix_diff)}};
  return j;
}

}  // namespace octoclif
