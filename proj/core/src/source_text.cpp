// Copyright 2026 The iaclint Authors.
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

#include "iaclint/source_text.hpp"

#include <utility>

namespace iaclint {

std::string normalize_newlines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
      out.push_back('\n');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

namespace {

// Length of the valid UTF-8 sequence starting at text[i], or 0 if invalid.
int utf8_sequence_length(std::string_view text, std::size_t i) {
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(text[k]);
  };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) return 1;
  int len;
  unsigned int min_cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    min_cp = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    min_cp = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    min_cp = 0x10000;
  } else {
    return 0;
  }
  if (i + len > text.size()) return 0;
  unsigned int cp = b0 & (0xFF >> (len + 1));
  for (int k = 1; k < len; ++k) {
    unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min_cp) return 0;                    // overlong encoding
  if (cp > 0x10FFFF) return 0;                  // beyond Unicode
  if (cp >= 0xD800 && cp <= 0xDFFF) return 0;   // surrogate
  return len;
}

constexpr std::string_view kReplacementChar = "\xEF\xBF\xBD";  // U+FFFD

}  // namespace

std::string replace_invalid_utf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    int len = utf8_sequence_length(text, i);
    if (len == 0) {
      out.append(kReplacementChar);
      ++i;
    } else {
      out.append(text.substr(i, static_cast<std::size_t>(len)));
      i += static_cast<std::size_t>(len);
    }
  }
  return out;
}

std::size_t utf8_length(std::string_view text) {
  std::size_t count = 0;
  for (char c : text) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++count;
  }
  return count;
}

SourceText::SourceText(std::string path, std::string_view raw)
    : path_(std::move(path)),
      text_(replace_invalid_utf8(normalize_newlines(raw))) {
  std::string_view rest = text_;
  while (!rest.empty()) {
    std::size_t nl = rest.find('\n');
    if (nl == std::string_view::npos) {
      lines_.push_back(rest);
      break;
    }
    lines_.push_back(rest.substr(0, nl));
    rest.remove_prefix(nl + 1);
    if (rest.empty()) lines_.push_back(rest);  // trailing newline: empty line
  }
  // A file that ends with '\n' contributes no final empty line; the loop
  // above adds one only to keep slice() exact, so drop it again.
  if (!lines_.empty() && lines_.back().empty() && text_.ends_with('\n')) {
    lines_.pop_back();
  }
}

std::string_view SourceText::line(int line_no) const {
  if (line_no < 1 || line_no > line_count()) return {};
  return lines_[static_cast<std::size_t>(line_no - 1)];
}

std::string SourceText::slice(int start_line, int end_line) const {
  std::string out;
  for (int i = start_line; i <= end_line && i <= line_count(); ++i) {
    if (i > start_line) out.push_back('\n');
    out.append(line(i));
  }
  return out;
}

SourceSpan SourceText::span(int start_line, int end_line) const {
  if (start_line < 1) start_line = 1;
  if (end_line < start_line) end_line = start_line;
  return SourceSpan{path_, start_line, end_line, slice(start_line, end_line)};
}

SourceSpan SourceText::whole_file_span() const {
  int last = line_count() > 0 ? line_count() : 1;
  return span(1, last);
}

}  // namespace iaclint
