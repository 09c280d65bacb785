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

#include "jsampler/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "jsampler/errors.hpp"

namespace jsampler {

namespace {

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) {
        throw ArgumentError("row has " + std::to_string(row.size()) + " cells, table has " +
                            std::to_string(columns_.size()) + " columns");
    }
    rows_.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string &name) const {
    const auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end()) throw ArgumentError("no column named '" + name + "'");
    return static_cast<std::size_t>(it - columns_.begin());
}

const Cell &Table::at(std::size_t row, const std::string &column) const {
    return rows_.at(row).at(column_index(column));
}

double Table::number(std::size_t row, const std::string &column) const {
    const Cell &c = at(row, column);
    if (const auto *i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
    if (const auto *d = std::get_if<double>(&c)) return *d;
    throw ArgumentError("column '" + column + "' is not numeric");
}

std::string Table::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        out << (i ? "," : "") << csv_escape(columns_[i]);
    }
    out << '\n';
    for (const auto &row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            std::visit(
                [&out](const auto &v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        out << format_double(v);
                    } else if constexpr (std::is_same_v<T, std::string>) {
                        out << csv_escape(v);
                    } else {
                        out << v;
                    }
                },
                row[i]);
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::ordered_json Table::to_json() const {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &row : rows_) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto &v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        // JSON has no NaN; emit null for undefined values.
                        obj[columns_[i]] =
                            std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json();
                    } else {
                        obj[columns_[i]] = v;
                    }
                },
                row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

} // namespace jsampler
