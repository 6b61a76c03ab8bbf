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

#ifndef GRAVENT_CLI_TABLE_HPP
#define GRAVENT_CLI_TABLE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gravent/cli/config.hpp"

namespace gravent::cli {

/// Rectangular numeric table. add_row rejects ragged or non-finite rows.
class ResultTable {
   public:
    explicit ResultTable(std::vector<std::string> columns);

    void add_row(std::vector<double> row);

    const std::vector<std::string> &columns() const { return columns_; }
    const std::vector<std::vector<double>> &rows() const { return rows_; }
    std::size_t column_index(std::string_view name) const;

   private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

inline constexpr int kSignificantDigits = 12;

std::string format_number(double value);

std::string to_csv(const ResultTable &table);
std::string to_json(const ResultTable &table);
std::string render(const ResultTable &table, OutputFormat format);

/// Inverse of to_csv (RFC 4180 quoting); Error(ParseError) on malformed input.
ResultTable parse_csv(std::string_view text);

/// Writes to `path`, or returns false without writing when `path` is empty.
/// Error(IoError) if the file cannot be written.
bool write_text(const std::string &path, const std::string &text);

}  // namespace gravent::cli

#endif  // GRAVENT_CLI_TABLE_HPP
