// Copyright 2026 The sarcpipe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimal RFC 4180 reader/writer: quoted fields may contain the delimiter,
// doubled quotes and line breaks. A leading UTF-8 BOM is dropped.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sarc::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view name) const;
};

std::vector<std::vector<std::string>> parse_records(std::string_view data, char delimiter = ',');

// First record is the header. Throws LoadError on unterminated quotes.
Table parse(std::string_view data, char delimiter = ',');
Table read_file(const std::filesystem::path& path, char delimiter = ',');

std::string quote(std::string_view field, char delimiter = ',');
std::string format_row(const std::vector<std::string>& fields, char delimiter = ',');

}  // namespace sarc::csv
