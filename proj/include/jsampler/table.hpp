// Copyright 2026 The jsampler Authors
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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace jsampler {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Column-named result table with deterministic CSV and JSON rendering.
/// Doubles are written in shortest round-trip form.
class Table {
  public:
    Table() = default;
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    /// Throws ArgumentError when the row width does not match the header.
    void add_row(std::vector<Cell> row);

    const std::vector<std::string> &columns() const { return columns_; }
    const std::vector<std::vector<Cell>> &rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    std::size_t column_index(const std::string &name) const;
    const Cell &at(std::size_t row, const std::string &column) const;
    /// Numeric cell as double; integers are widened.
    double number(std::size_t row, const std::string &column) const;

    std::string to_csv() const;
    /// Array of row objects.
    nlohmann::ordered_json to_json() const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

std::string format_double(double v);

} // namespace jsampler
