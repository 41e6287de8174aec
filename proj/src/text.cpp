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

#include "sarc/text.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

namespace sarc::text {

std::vector<CodePoint> decode(std::string_view s) {
  std::vector<CodePoint> out;
  out.reserve(s.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto n = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < n) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, n, c);
    if (c < 0) {
      out.push_back({U'�', static_cast<std::size_t>(start), 1, false});
      i = start + 1;
    } else {
      out.push_back({static_cast<char32_t>(c), static_cast<std::size_t>(start),
                     static_cast<std::size_t>(i - start), true});
    }
  }
  return out;
}

void append_utf8(std::string& out, char32_t c) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
  if (error) throw std::invalid_argument("invalid code point");
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(len));
}

bool is_whitespace(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

bool is_punctuation(char32_t c) { return u_ispunct(static_cast<UChar32>(c)); }

bool is_alphabetic(char32_t c) { return u_isUAlphabetic(static_cast<UChar32>(c)); }

bool is_uppercase(char32_t c) { return u_isUUppercase(static_cast<UChar32>(c)); }

std::vector<Span> token_spans(std::string_view s) {
  std::vector<Span> spans;
  bool in_token = false;
  std::size_t begin = 0;
  for (const auto& cp : decode(s)) {
    const bool ws = cp.valid && is_whitespace(cp.value);
    if (ws && in_token) {
      spans.push_back({begin, cp.offset});
      in_token = false;
    } else if (!ws && !in_token) {
      begin = cp.offset;
      in_token = true;
    }
  }
  if (in_token) spans.push_back({begin, s.size()});
  return spans;
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& sp : token_spans(s)) out.emplace_back(s.substr(sp.begin, sp.end - sp.begin));
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto spans = token_spans(s);
  if (spans.empty()) return {};
  return std::string(s.substr(spans.front().begin, spans.back().end - spans.front().begin));
}

std::string collapse_whitespace(std::string_view s) { return join(tokens(s), " "); }

namespace {

icu::UnicodeString to_icu(std::string_view s) {
  return icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
}

std::string from_icu(const icu::UnicodeString& u) {
  std::string out;
  u.toUTF8String(out);
  return out;
}

}  // namespace

std::string to_lower(std::string_view s) {
  auto u = to_icu(s);
  u.toLower(icu::Locale::getRoot());
  return from_icu(u);
}

std::string case_fold(std::string_view s) {
  auto u = to_icu(s);
  u.foldCase();
  return from_icu(u);
}

std::string nfc(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalizer unavailable");
  auto out = norm->normalize(to_icu(s), status);
  if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");
  return from_icu(out);
}

std::string dedup_key(std::string_view s) { return collapse_whitespace(case_fold(nfc(s))); }

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sarc::text
