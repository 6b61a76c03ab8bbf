// Copyright 2026 The gravent Authors
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

#include "gravent/cli/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "gravent/error.hpp"

namespace gravent::cli {

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Splits one CSV record starting at `pos`; advances `pos` past its newline.
std::vector<std::string> read_record(std::string_view text, std::size_t &pos) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    while (pos < text.size()) {
        const char c = text[pos++];
        if (quoted) {
            if (c == '"') {
                if (pos < text.size() && text[pos] == '"') {
                    cur += '"';
                    ++pos;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            if (!cur.empty()) throw Error(ErrorCode::ParseError, "stray quote in CSV field");
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c == '\n') {
            break;
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (quoted) throw Error(ErrorCode::ParseError, "unterminated quoted CSV field");
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void ResultTable::add_row(std::vector<double> row) {
    if (row.size() != columns_.size()) {
        throw Error(ErrorCode::DimensionMismatch, "row has " + std::to_string(row.size()) + " cells, table has " +
                                                      std::to_string(columns_.size()) + " columns");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (!std::isfinite(row[i])) throw Error(ErrorCode::InvalidArgument, "non-finite value in column " + columns_[i]);
    }
    rows_.push_back(std::move(row));
}

std::size_t ResultTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (columns_[i] == name) return i;
    throw Error(ErrorCode::InvalidArgument, "no column named " + std::string(name));
}

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // drop the sign of negative zero
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, value);
    return buf;
}

std::string to_csv(const ResultTable &table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns().size(); ++i) {
        if (i) out += ',';
        out += csv_field(table.columns()[i]);
    }
    out += '\n';
    for (const auto &row : table.rows()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const ResultTable &table) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto &row : table.rows()) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            // Round through the CSV text so both formats carry the same digits.
            obj[table.columns()[i]] = std::strtod(format_number(row[i]).c_str(), nullptr);
        }
        doc.push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

std::string render(const ResultTable &table, OutputFormat format) {
    return format == OutputFormat::Json ? to_json(table) : to_csv(table);
}

ResultTable parse_csv(std::string_view text) {
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty CSV document");
    std::size_t pos = 0;
    ResultTable table(read_record(text, pos));
    std::size_t line = 1;
    while (pos < text.size()) {
        ++line;
        const auto fields = read_record(text, pos);
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto &f : fields) {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (f.empty() || ec != std::errc{} || ptr != f.data() + f.size()) {
                throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad number '" + f + "'");
            }
            row.push_back(v);
        }
        table.add_row(std::move(row));
    }
    return table;
}

bool write_text(const std::string &path, const std::string &text) {
    if (path.empty()) return false;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
    return true;
}

}  // namespace gravent::cli
