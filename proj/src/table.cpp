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

#include "nearfocus/table.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "nearfocus/errors.hpp"

namespace nearfocus
{

std::string format_number(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

void ResultTable::add_row(std::vector<double> row)
{
    if (row.size() != columns.size())
        throw ArgumentError("table '" + name + "': row has " + std::to_string(row.size()) +
                            " values, header has " + std::to_string(columns.size()));
    rows.push_back(std::move(row));
}

void ResultTable::set_meta(const std::string &key, const std::string &value)
{
    for (auto &kv : metadata)
        if (kv.first == key)
        {
            kv.second = value;
            return;
        }
    metadata.emplace_back(key, value);
}

const std::string *ResultTable::meta(const std::string &key) const
{
    for (const auto &kv : metadata)
        if (kv.first == key)
            return &kv.second;
    return nullptr;
}

std::string to_csv(const ResultTable &table)
{
    std::string out;
    for (size_t c = 0; c < table.columns.size(); ++c)
    {
        if (c)
            out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto &row : table.rows)
    {
        for (size_t c = 0; c < row.size(); ++c)
        {
            if (c)
                out += ',';
            out += format_number(row[c]);
        }
        out += '\n';
    }
    return out;
}

namespace
{

nlohmann::ordered_json metadata_json(const ResultTable &table)
{
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto &[k, v] : table.metadata)
        meta[k] = v;
    return meta;
}

void write_file(const std::string &path, const std::string &content)
{
    const std::filesystem::path p(path);
    std::error_code ec;
    if (p.has_parent_path())
        std::filesystem::create_directories(p.parent_path(), ec);
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError(path, "cannot open for writing");
    f << content;
    f.flush();
    if (!f)
        throw IoError(path, "write failed");
}

} // namespace

std::string to_json(const ResultTable &table)
{
    nlohmann::ordered_json j;
    j["name"] = table.name;
    j["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto &row : table.rows)
    {
        auto r = nlohmann::ordered_json::array();
        for (double v : row)
        {
            if (std::isfinite(v))
                r.push_back(v);
            else
                r.push_back(nullptr);
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["metadata"] = metadata_json(table);
    return j.dump(2) + "\n";
}

void write_table(const ResultTable &table, OutputFormat format, const std::string &destination)
{
    if (format == OutputFormat::Json)
    {
        write_file(destination, to_json(table));
        return;
    }
    write_file(destination, to_csv(table));
    const std::filesystem::path p(destination);
    auto meta_path = p.parent_path() / (p.stem().string() + ".meta.json");
    write_file(meta_path.string(), metadata_json(table).dump(2) + "\n");
}

} // namespace nearfocus
