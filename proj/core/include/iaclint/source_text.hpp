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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "iaclint/source_span.hpp"

namespace iaclint {

/// Replaces CRLF and lone CR with LF.
std::string normalize_newlines(std::string_view text);

/// Replaces every invalid UTF-8 byte sequence with U+FFFD. Valid input
/// passes through unchanged.
std::string replace_invalid_utf8(std::string_view text);

/// Number of Unicode code points in a (valid) UTF-8 string.
std::size_t utf8_length(std::string_view text);

/// A source file after newline and UTF-8 normalization, indexed by 1-based
/// line number. All spans handed to the IR are sliced from here, so the
/// span-soundness invariant (raw_code == slice of the normalized file)
/// holds by construction.
class SourceText {
 public:
  SourceText(std::string path, std::string_view raw);

  const std::string& path() const { return path_; }
  const std::string& text() const { return text_; }
  int line_count() const { return static_cast<int>(lines_.size()); }

  /// 1-based; the line without its newline. Out-of-range lines are empty.
  std::string_view line(int line_no) const;

  /// Lines [start_line, end_line] joined with '\n', no trailing newline.
  std::string slice(int start_line, int end_line) const;

  SourceSpan span(int start_line, int end_line) const;
  SourceSpan whole_file_span() const;

 private:
  std::string path_;
  std::string text_;
  std::vector<std::string_view> lines_;  // views into text_
};

}  // namespace iaclint
