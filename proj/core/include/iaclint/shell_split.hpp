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

#include <string>
#include <string_view>
#include <vector>

namespace iaclint {

/// Removes backslash-newline continuations (outside single quotes), so a
/// multi-line shell string reads as one logical command.
std::string join_shell_continuations(std::string_view command);

/// Splits a shell command into statements on top-level `&&`, `||` and `;`
/// (plus `|` when `split_on_pipe`). Single and double quotes are respected;
/// backslash escapes the next character outside single quotes. Empty
/// segments are dropped and statements are trimmed.
std::vector<std::string> split_shell_statements(std::string_view command,
                                                bool split_on_pipe);

/// Statement count with `|` treated as a separator; continuations joined
/// first. This is the multifaceted-abstraction measure.
std::size_t shell_statement_count(std::string_view command);

/// First whitespace-delimited token (surrounding quotes stripped).
std::string shell_first_word(std::string_view statement);

}  // namespace iaclint
