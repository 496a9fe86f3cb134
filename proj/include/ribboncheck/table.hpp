/*
   Copyright 2026 The ribboncheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Minimal RFC 4180 style CSV reading for link tables ("name,spec,...").
#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ribboncheck {

struct TableRow {
    std::map<std::string, std::string> fields;
    std::size_t line = 0;

    const std::string& at(const std::string& column) const {
        auto it = fields.find(column);
        if (it == fields.end()) throw InputError("missing column '" + column + "'");
        return it->second;
    }
    std::string get(const std::string& column) const {
        auto it = fields.find(column);
        return it == fields.end() ? std::string() : it->second;
    }
};

inline std::vector<std::string> split_csv_line(const std::string& line, std::size_t lineNo) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (quoted) throw InputError("unterminated quote on line " + std::to_string(lineNo));
    out.push_back(std::move(cur));
    return out;
}

/// Reads a headed CSV table. Blank lines are skipped; short rows leave the
/// trailing columns empty.
inline std::vector<TableRow> read_table(std::istream& in) {
    std::string line;
    std::size_t lineNo = 0;
    std::vector<std::string> header;
    while (header.empty() && std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line != "\r") header = split_csv_line(line, lineNo);
    }
    if (header.empty()) throw InputError("table has no header row");
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty() || line == "\r") continue;
        auto cells = split_csv_line(line, lineNo);
        TableRow row;
        row.line = lineNo;
        for (std::size_t i = 0; i < header.size(); ++i) row.fields[header[i]] = i < cells.size() ? cells[i] : "";
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ribboncheck
