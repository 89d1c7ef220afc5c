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

#include "iaclint/shell_split.hpp"

#include <cctype>

namespace iaclint {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string join_shell_continuations(std::string_view command) {
  std::string out;
  out.reserve(command.size());
  bool in_single = false;
  for (std::size_t i = 0; i < command.size(); ++i) {
    char c = command[i];
    if (c == '\'') in_single = !in_single;
    if (!in_single && c == '\\' && i + 1 < command.size() &&
        command[i + 1] == '\n') {
      ++i;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> split_shell_statements(std::string_view command,
                                                bool split_on_pipe) {
  std::vector<std::string> statements;
  std::string current;
  enum class Quote { none, single, dbl } quote = Quote::none;

  const std::string joined = join_shell_continuations(command);
  for (std::size_t i = 0; i < joined.size(); ++i) {
    char c = joined[i];
    switch (quote) {
      case Quote::single:
        current.push_back(c);
        if (c == '\'') quote = Quote::none;
        continue;
      case Quote::dbl:
        if (c == '\\' && i + 1 < joined.size()) {
          current.push_back(c);
          current.push_back(joined[++i]);
          continue;
        }
        current.push_back(c);
        if (c == '"') quote = Quote::none;
        continue;
      case Quote::none:
        break;
    }
    if (c == '\\' && i + 1 < joined.size()) {
      current.push_back(c);
      current.push_back(joined[++i]);
      continue;
    }
    if (c == '\'') {
      quote = Quote::single;
      current.push_back(c);
      continue;
    }
    if (c == '"') {
      quote = Quote::dbl;
      current.push_back(c);
      continue;
    }
    bool is_separator = false;
    bool doubled =
        (c == '&' || c == '|') && i + 1 < joined.size() && joined[i + 1] == c;
    if (doubled) {  // "&&" or "||"
      is_separator = true;
      ++i;
    } else if (c == ';') {
      is_separator = true;
    } else if (c == '|' && split_on_pipe) {
      is_separator = true;
    }
    if (is_separator) {
      std::string stmt = trim(current);
      if (!stmt.empty()) statements.push_back(std::move(stmt));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  std::string stmt = trim(current);
  if (!stmt.empty()) statements.push_back(std::move(stmt));
  return statements;
}

std::size_t shell_statement_count(std::string_view command) {
  return split_shell_statements(command, /*split_on_pipe=*/true).size();
}

std::string shell_first_word(std::string_view statement) {
  std::string trimmed = trim(statement);
  std::size_t end = 0;
  while (end < trimmed.size() &&
         !std::isspace(static_cast<unsigned char>(trimmed[end]))) {
    ++end;
  }
  std::string word = trimmed.substr(0, end);
  if (word.size() >= 2 &&
      ((word.front() == '"' && word.back() == '"') ||
       (word.front() == '\'' && word.back() == '\''))) {
    word = word.substr(1, word.size() - 2);
  }
  return word;
}

}  // namespace iaclint
