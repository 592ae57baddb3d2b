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

#ifndef ASCAN_CSV_HPP_
#define ASCAN_CSV_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace ascan::csv {

// A header plus rows of raw string cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of `name` in the header; throws Error(kInvalidArgument) if absent.
  std::size_t column(const std::string& name) const;
};

// Comma-separated, optional double-quoted fields ("" escapes a quote),
// LF or CRLF. Every row must have as many cells as the header.
Table parse(const std::string& text);
Table read_file(const std::filesystem::path& path);

}  // namespace ascan::csv

#endif  // ASCAN_CSV_HPP_
