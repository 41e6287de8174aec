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

// UTF-8 text helpers backed by ICU character properties.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sarc::text {

// One decoded code point. Malformed bytes decode to `valid == false` with a
// length of one byte so callers can pass them through untouched.
struct CodePoint {
  char32_t value;
  std::size_t offset;
  std::size_t length;
  bool valid;
};

std::vector<CodePoint> decode(std::string_view s);
void append_utf8(std::string& out, char32_t c);

bool is_whitespace(char32_t c);
// Unicode general categories Pc, Pd, Ps, Pe, Pi, Pf, Po.
bool is_punctuation(char32_t c);
bool is_alphabetic(char32_t c);
bool is_uppercase(char32_t c);

// Byte ranges of whitespace-delimited tokens, in order.
struct Span {
  std::size_t begin;
  std::size_t end;
};
std::vector<Span> token_spans(std::string_view s);
std::vector<std::string> tokens(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string trim(std::string_view s);
// Trims, then replaces every internal whitespace run with one ASCII space.
std::string collapse_whitespace(std::string_view s);

std::string to_lower(std::string_view s);
std::string case_fold(std::string_view s);
std::string nfc(std::string_view s);

// NFC, case folded, whitespace collapsed. Two texts are duplicates iff their
// keys are equal.
std::string dedup_key(std::string_view s);

// Stable 64-bit FNV-1a; used for token hashing and seed mixing, so its output
// must not depend on the platform.
std::uint64_t fnv1a(std::string_view s);

}  // namespace sarc::text
