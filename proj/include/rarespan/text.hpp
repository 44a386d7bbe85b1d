// Copyright 2026 The Rarespan Authors
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

#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rarespan/unicode_tables.hpp"

namespace rarespan {

// Per-token rewrite applied after case folding. Identity by default;
// corpus-specific orthographic normalization plugs in here.
using Normalizer = std::function<std::string(const std::string&)>;

inline Normalizer identity_normalizer() {
  return [](const std::string& tok) { return tok; };
}

namespace detail {

inline bool in_ranges(char32_t cp,
                      const unicode::Range* first, const unicode::Range* last) {
  auto it = std::upper_bound(first, last, cp,
                             [](char32_t v, const unicode::Range& r) {
                               return v < r.lo;
                             });
  return it != first && cp <= std::prev(it)->hi;
}

inline bool is_punct_or_symbol(char32_t cp) {
  return in_ranges(cp, unicode::kPunctSymbolRanges.data(),
                   unicode::kPunctSymbolRanges.data() +
                       unicode::kPunctSymbolRanges.size());
}

inline bool is_whitespace(char32_t cp) {
  return in_ranges(cp, unicode::kWhitespaceRanges.data(),
                   unicode::kWhitespaceRanges.data() +
                       unicode::kWhitespaceRanges.size());
}

inline char32_t fold_case(char32_t cp) {
  if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 32 : cp;
  auto it = std::lower_bound(unicode::kSimpleFolds.begin(),
                             unicode::kSimpleFolds.end(), cp,
                             [](const unicode::FoldPair& p, char32_t v) {
                               return p.from < v;
                             });
  if (it != unicode::kSimpleFolds.end() && it->from == cp) return it->to;
  return cp;
}

// Decodes one UTF-8 codepoint starting at `i`, advancing `i`. Malformed
// bytes decode as U+FFFD one byte at a time.
inline char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(s[k]);
  };
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + len > s.size()) {
    ++i;
    return 0xFFFD;
  }
  for (int k = 1; k < len; ++k) {
    const unsigned char bk = byte(i + k);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  i += len;
  return cp;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace detail

// Case-folds, splits on whitespace, and emits every punctuation or symbol
// character (Unicode categories P* and S*) as its own token. The normalizer
// runs per token after folding; tokens it maps to "" are dropped.
inline std::vector<std::string> tokenize(std::string_view raw_text,
                                         const Normalizer& normalizer = {}) {
  std::vector<std::string> tokens;
  std::string current;
  const auto flush = [&] {
    if (current.empty()) return;
    std::string tok = normalizer ? normalizer(current) : current;
    if (!tok.empty()) tokens.push_back(std::move(tok));
    current.clear();
  };
  std::size_t i = 0;
  while (i < raw_text.size()) {
    const char32_t cp = detail::decode_utf8(raw_text, i);
    if (detail::is_whitespace(cp)) {
      flush();
    } else if (detail::is_punct_or_symbol(cp)) {
      flush();
      detail::append_utf8(current, cp);
      flush();
    } else {
      detail::append_utf8(current, detail::fold_case(cp));
    }
  }
  flush();
  return tokens;
}

}  // namespace rarespan
