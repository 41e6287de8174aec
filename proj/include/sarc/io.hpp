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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sarc::io {

// All throw LoadError when the file cannot be opened.
std::string read_text(const std::filesystem::path& path);
// Splits on '\n', strips a trailing '\r' per line and drops the empty piece
// after a final newline.
std::vector<std::string> read_lines(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view content);
void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines);

}  // namespace sarc::io
