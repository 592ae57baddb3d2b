/* Copyright 2026 The ASC Analyzer Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "ascan/csv.hpp"

#include <fstream>
#include <sstream>

#include "ascan/error.hpp"

namespace ascan::csv {

namespace {

std::vector<std::vector<std::string>> split_records(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string cell;
  bool quoted = false;
  bool any = false;  // current record has content
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        any = true;
        break;
      case ',':
        record.push_back(std::move(cell));
        cell.clear();
        any = true;
        break;
      case '\r':
        break;
      case '\n':
        if (any || !cell.empty()) {
          record.push_back(std::move(cell));
          records.push_back(std::move(record));
        }
        record.clear();
        cell.clear();
        any = false;
        break;
      default:
        cell.push_back(c);
        any = true;
    }
  }
  if (quoted) throw Error(ErrorKind::kParse, "csv: unterminated quoted field");
  if (any || !cell.empty()) {
    record.push_back(std::move(cell));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw Error(ErrorKind::kInvalidArgument, "csv: no column named '" + name + "'");
}

Table parse(const std::string& text) {
  auto records = split_records(text);
  if (records.empty()) throw Error(ErrorKind::kParse, "csv: missing header row");
  Table t;
  t.header = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != t.header.size()) {
      throw Error(ErrorKind::kParse, "csv: row " + std::to_string(r + 1) + " has " +
                                         std::to_string(records[r].size()) + " cells, header has " +
                                         std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(records[r]));
  }
  return t;
}

Table read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace ascan::csv
