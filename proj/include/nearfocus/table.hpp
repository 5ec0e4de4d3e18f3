// SPDX-License-Identifier: Apache-2.0
//
// nearfocus - near-field focusing analysis for sparse linear antenna arrays
// Copyright (C) 2026 The nearfocus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NEARFOCUS_TABLE_HPP
#define NEARFOCUS_TABLE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nearfocus/config.hpp"

namespace nearfocus
{

class IoError : public std::runtime_error
{
public:
    IoError(const std::string &path, const std::string &message)
        : std::runtime_error(path + ": " + message), path_(path) {}

    const std::string &path() const noexcept { return path_; }

private:
    std::string path_;
};

// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

struct ResultTable
{
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata; // insertion-ordered

    // Throws ArgumentError when the row width differs from the header.
    void add_row(std::vector<double> row);
    void set_meta(const std::string &key, const std::string &value);
    const std::string *meta(const std::string &key) const;
};

std::string to_csv(const ResultTable &table);
std::string to_json(const ResultTable &table);

/// Writes the table to `destination`. CSV output carries only header and rows;
/// its metadata goes to a sibling "<stem>.meta.json". JSON output embeds it.
void write_table(const ResultTable &table, OutputFormat format, const std::string &destination);

} // namespace nearfocus

#endif
