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
//
// Restricted Chef recipe grammar: comments, simple assignments, and
// resource blocks of the shape
//
//   TYPE 'NAME' do
//     attribute value-literal
//   end
//
// Nested control blocks inside a resource are skipped with a warning;
// anything else unrecognized at the top level is skipped with a warning.

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "iaclint/errors.hpp"
#include "iaclint/parsers.hpp"
#include "iaclint/source_text.hpp"

namespace iaclint {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

/// `#{...}` interpolation markers for Ruby double-quoted strings.
std::vector<InterpolationMarker> scan_ruby_markers(std::string_view content) {
  std::vector<InterpolationMarker> markers;
  for (std::size_t i = 0; i + 1 < content.size(); ++i) {
    if (content[i] == '#' && content[i + 1] == '{') {
      if (i > 0 && content[i - 1] == '\\') continue;
      std::size_t close = content.find('}', i + 2);
      if (close == std::string_view::npos) continue;
      markers.push_back({static_cast<int>(i), static_cast<int>(close + 1),
                         /*braced=*/true});
      i = close;
    }
  }
  return markers;
}

/// Parses one Ruby-ish literal: quoted string, number, bool, nil, symbol.
/// Anything else is kept as a raw string value.
std::optional<Value> parse_literal(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) return std::nullopt;
  if (s.size() >= 2 && s.front() == '\'' && s.back() == '\'') {
    std::string content = s.substr(1, s.size() - 2);
    std::string unescaped;
    for (std::size_t i = 0; i < content.size(); ++i) {
      if (content[i] == '\\' && i + 1 < content.size() &&
          (content[i + 1] == '\'' || content[i + 1] == '\\')) {
        unescaped.push_back(content[++i]);
      } else {
        unescaped.push_back(content[i]);
      }
    }
    return Value::string(unescaped);
  }
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    std::string content = s.substr(1, s.size() - 2);
    std::string unescaped;
    for (std::size_t i = 0; i < content.size(); ++i) {
      if (content[i] == '\\' && i + 1 < content.size() &&
          (content[i + 1] == '"' || content[i + 1] == '\\')) {
        unescaped.push_back(content[++i]);
      } else {
        unescaped.push_back(content[i]);
      }
    }
    auto markers = scan_ruby_markers(unescaped);
    return Value::string(unescaped, std::move(markers));
  }
  if (s == "true") return Value::boolean(true);
  if (s == "false") return Value::boolean(false);
  if (s == "nil") return Value::null();
  if (s[0] == ':' && is_identifier(s.substr(1))) return Value::string(s);
  bool numeric = true;
  bool is_float = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '-' && i == 0) continue;
    if (c == '.') {
      is_float = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      numeric = false;
      break;
    }
  }
  if (numeric && s != "-" && s != ".") {
    if (is_float) return Value::floating(std::stod(s));
    return Value::integer(std::stoll(s));
  }
  return Value::string(s);
}

bool opens_nested_block(const std::string& line) {
  static const char* kKeywords[] = {"if",    "unless", "case",  "begin",
                                    "while", "until",  "for"};
  for (const char* kw : kKeywords) {
    std::string prefix = std::string(kw);
    if (line == prefix || line.rfind(prefix + " ", 0) == 0 ||
        line.rfind(prefix + "(", 0) == 0) {
      return true;
    }
  }
  // Trailing block form: `... do` or `... do |x|`.
  std::string_view view = line;
  if (view == "do" || view.ends_with(" do")) return true;
  if (view.ends_with("|") && view.rfind(" do ") != std::string_view::npos) {
    return true;
  }
  return false;
}

bool is_end_line(const std::string& line) {
  return line == "end" || line.rfind("end ", 0) == 0 ||
         line.rfind("end#", 0) == 0;
}

struct ResourceHeader {
  std::string type;
  std::string name;
};

/// Matches `TYPE 'NAME' do` (single or double quotes around NAME).
std::optional<ResourceHeader> match_resource_header(const std::string& line) {
  std::size_t i = 0;
  while (i < line.size() &&
         (std::isalnum(static_cast<unsigned char>(line[i])) ||
          line[i] == '_')) {
    ++i;
  }
  if (i == 0) return std::nullopt;
  std::string type = line.substr(0, i);
  if (!is_identifier(type)) return std::nullopt;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
    ++i;
  }
  if (i >= line.size() || (line[i] != '\'' && line[i] != '"')) {
    return std::nullopt;
  }
  char quote = line[i];
  std::size_t close = line.find(quote, i + 1);
  if (close == std::string::npos) return std::nullopt;
  std::string name = line.substr(i + 1, close - i - 1);
  std::string rest = trim(line.substr(close + 1));
  if (rest != "do") return std::nullopt;
  return ResourceHeader{type, name};
}

}  // namespace

TechParseResult parse_chef(std::string_view source, std::string_view path) {
  SourceText text(std::string(path), source);
  TechParseResult result;
  UnitBlock& file = result.block;
  file.kind = UnitBlockKind::script;
  file.name = text.path();
  file.span = text.whole_file_span();

  const int line_count = text.line_count();
  int line_no = 1;
  while (line_no <= line_count) {
    std::string line = trim(text.line(line_no));
    if (line.empty()) {
      ++line_no;
      continue;
    }
    if (line[0] == '#') {
      std::string comment_text = normalize_whitespace(line.substr(1));
      if (!comment_text.empty()) {
        file.comments.push_back(
            {std::move(comment_text), text.span(line_no, line_no)});
      }
      ++line_no;
      continue;
    }
    if (auto header = match_resource_header(line)) {
      int start_line = line_no;
      AtomicUnit unit;
      unit.type = header->type;
      unit.name = header->name;
      ++line_no;
      bool terminated = false;
      bool warned_nested = false;
      while (line_no <= line_count) {
        std::string body_line = trim(text.line(line_no));
        if (body_line.empty()) {
          ++line_no;
          continue;
        }
        if (body_line[0] == '#') {
          std::string comment_text = normalize_whitespace(body_line.substr(1));
          if (!comment_text.empty()) {
            file.comments.push_back(
                {std::move(comment_text), text.span(line_no, line_no)});
          }
          ++line_no;
          continue;
        }
        if (is_end_line(body_line)) {
          terminated = true;
          break;
        }
        if (opens_nested_block(body_line)) {
          if (!warned_nested) {
            result.warnings.push_back(
                std::string(path) + ":" + std::to_string(line_no) +
                ": nested block inside resource skipped");
            warned_nested = true;
          }
          int depth = 1;
          ++line_no;
          while (line_no <= line_count && depth > 0) {
            std::string nested_line = trim(text.line(line_no));
            if (is_end_line(nested_line)) {
              --depth;
            } else if (opens_nested_block(nested_line)) {
              ++depth;
            }
            ++line_no;
          }
          if (depth > 0) {
            throw ParseError(std::string(path) + ":" +
                             std::to_string(start_line) +
                             ": unterminated block");
          }
          continue;
        }
        // Attribute line: `name value-literal`.
        std::size_t name_end = 0;
        while (name_end < body_line.size() &&
               (std::isalnum(static_cast<unsigned char>(body_line[name_end])) ||
                body_line[name_end] == '_')) {
          ++name_end;
        }
        std::string attr_name = body_line.substr(0, name_end);
        if (!is_identifier(attr_name)) {
          result.warnings.push_back(std::string(path) + ":" +
                                    std::to_string(line_no) +
                                    ": unrecognized resource body line");
          ++line_no;
          continue;
        }
        std::string rest = trim(body_line.substr(name_end));
        Attribute attr;
        attr.name = attr_name;
        if (auto value = parse_literal(rest)) {
          attr.value = *value;
        } else {
          attr.value = Value::boolean(true);  // bare flag, e.g. `recursive`
        }
        attr.span = text.span(line_no, line_no);
        bool duplicate = false;
        for (const Attribute& existing : unit.attributes) {
          if (existing.name == attr.name) {
            duplicate = true;
            break;
          }
        }
        if (duplicate) {
          result.warnings.push_back(std::string(path) + ":" +
                                    std::to_string(line_no) +
                                    ": duplicate attribute '" + attr.name +
                                    "' ignored");
        } else {
          unit.attributes.push_back(std::move(attr));
        }
        ++line_no;
      }
      if (!terminated) {
        throw ParseError(std::string(path) + ":" + std::to_string(start_line) +
                         ": unterminated block");
      }
      unit.span = text.span(start_line, line_no);
      file.atomic_units.push_back(std::move(unit));
      ++line_no;  // past `end`
      continue;
    }
    // Simple assignment: `name = literal`.
    std::size_t eq = line.find('=');
    if (eq != std::string::npos && eq + 1 < line.size() &&
        line[eq + 1] != '=') {
      std::string lhs = trim(line.substr(0, eq));
      if (is_identifier(lhs)) {
        std::string rhs = trim(line.substr(eq + 1));
        if (auto value = parse_literal(rhs)) {
          Variable var;
          var.name = lhs;
          var.value = *value;
          var.span = text.span(line_no, line_no);
          file.variables.push_back(std::move(var));
          ++line_no;
          continue;
        }
      }
    }
    result.warnings.push_back(std::string(path) + ":" +
                              std::to_string(line_no) +
                              ": unrecognized top-level line skipped");
    ++line_no;
    continue;
  }
  return result;
}

}  // namespace iaclint
