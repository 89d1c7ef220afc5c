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
// HCL2 subset. Blocks and attributes are parsed structurally; expressions
// that are not plain literals (references, function calls, operators,
// objects) are kept as raw strings with a covering interpolation marker so
// they are never mistaken for hard-coded literals.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "iaclint/errors.hpp"
#include "iaclint/parsers.hpp"
#include "iaclint/source_text.hpp"

namespace iaclint {

namespace {

struct BodyItem {
  // Either an attribute (`name = expr`) or a nested block.
  bool is_block = false;
  std::string name;              // attribute name or block type
  std::vector<std::string> labels;
  Value value;                   // attribute value
  std::vector<BodyItem> body;    // block body
  int start_line = 1;
  int end_line = 1;
};

class HclParser {
 public:
  HclParser(const SourceText& source) : source_(source), text_(source.text()) {}

  std::vector<BodyItem> parse_file(std::vector<Comment>& comments) {
    std::vector<BodyItem> items = parse_body(/*top_level=*/true);
    comments = std::move(comments_);
    return items;
  }

 private:
  [[noreturn]] void fail(const std::string& message, int line) const {
    throw ParseError(source_.path() + ":" + std::to_string(line) + ": " +
                     message);
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' || (c == '/' && peek_char(1) == '/')) {
        std::size_t start = pos_ + (c == '#' ? 1 : 2);
        std::size_t eol = text_.find('\n', pos_);
        if (eol == std::string::npos) eol = text_.size();
        add_comment(std::string(text_.substr(start, eol - start)), line_,
                    line_);
        pos_ = eol;
      } else if (c == '/' && peek_char(1) == '*') {
        int start_line = line_;
        std::size_t end = text_.find("*/", pos_ + 2);
        if (end == std::string::npos) fail("unterminated comment", line_);
        std::string body(text_.substr(pos_ + 2, end - pos_ - 2));
        for (char ch : body) {
          if (ch == '\n') ++line_;
        }
        add_comment(body, start_line, line_);
        pos_ = end + 2;
      } else {
        return;
      }
    }
  }

  void add_comment(std::string body, int start_line, int end_line) {
    std::string trimmed = normalize_whitespace(body);
    if (trimmed.empty()) return;
    Comment comment;
    comment.text = std::move(trimmed);
    comment.span = source_.span(start_line, end_line);
    comments_.push_back(std::move(comment));
  }

  char peek_char(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  bool at_end() {
    skip_trivia();
    return pos_ >= text_.size();
  }

  std::string read_identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '-') {
        ++pos_;
      } else {
        break;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_quoted(std::vector<InterpolationMarker>* markers) {
    // Caller sits on the opening quote.
    ++pos_;
    std::string content;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      char c = text_[pos_];
      if (c == '\\' && pos_ + 1 < text_.size()) {
        char esc = text_[pos_ + 1];
        if (esc == '"' || esc == '\\') {
          content.push_back(esc);
          pos_ += 2;
          continue;
        }
      }
      if (c == '\n') ++line_;
      content.push_back(c);
      ++pos_;
    }
    if (pos_ >= text_.size()) fail("unterminated string", line_);
    ++pos_;
    if (markers) {
      for (std::size_t i = 0; i + 1 < content.size(); ++i) {
        if (content[i] == '$' && content[i + 1] == '{') {
          std::size_t close = content.find('}', i + 2);
          if (close == std::string::npos) break;
          markers->push_back({static_cast<int>(i),
                              static_cast<int>(close + 1), /*braced=*/true});
          i = close;
        }
      }
    }
    return content;
  }

  std::vector<BodyItem> parse_body(bool top_level) {
    std::vector<BodyItem> items;
    while (!at_end()) {
      char c = text_[pos_];
      if (c == '}') {
        if (top_level) fail("unexpected '}'", line_);
        return items;
      }
      if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') {
        fail("expected identifier", line_);
      }
      BodyItem item;
      item.start_line = line_;
      item.name = read_identifier();
      skip_trivia();
      // Labels: quoted strings or bare identifiers before '{'.
      while (pos_ < text_.size() &&
             (text_[pos_] == '"' ||
              std::isalpha(static_cast<unsigned char>(text_[pos_])))) {
        if (text_[pos_] == '"') {
          item.labels.push_back(read_quoted(nullptr));
        } else {
          item.labels.push_back(read_identifier());
        }
        skip_trivia();
      }
      if (pos_ < text_.size() && text_[pos_] == '=' && peek_char(1) != '=') {
        if (!item.labels.empty()) fail("unexpected '='", line_);
        ++pos_;
        skip_trivia();
        int value_end = line_;
        item.value = parse_expression(value_end);
        item.is_block = false;
        item.end_line = value_end;
        items.push_back(std::move(item));
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == '{') {
        ++pos_;
        item.is_block = true;
        item.body = parse_body(/*top_level=*/false);
        skip_trivia();
        if (pos_ >= text_.size() || text_[pos_] != '}') {
          fail("expected '}'", line_);
        }
        item.end_line = line_;
        ++pos_;
        items.push_back(std::move(item));
        continue;
      }
      fail("expected '=' or '{' after '" + item.name + "'", item.start_line);
    }
    if (!top_level) fail("unexpected end of file", line_);
    return items;
  }

  Value parse_expression(int& end_line) {
    skip_trivia();
    if (pos_ >= text_.size()) fail("expected expression", line_);
    char c = text_[pos_];
    if (c == '=' || c == ',' || c == ';' || c == ')' || c == '}' ||
        c == ']') {
      fail(std::string("expected expression, found '") + c + "'", line_);
    }
    std::size_t expr_start = pos_;
    int expr_line = line_;
    Value value;
    bool literal = true;
    if (c == '"') {
      std::vector<InterpolationMarker> markers;
      std::string content = read_quoted(&markers);
      value = Value::string(std::move(content), std::move(markers));
    } else if (c == '[') {
      ++pos_;
      std::vector<Value> itemsv;
      while (true) {
        skip_trivia();
        if (pos_ >= text_.size()) fail("unterminated list", expr_line);
        if (text_[pos_] == ']') {
          ++pos_;
          break;
        }
        int item_end = line_;
        itemsv.push_back(parse_expression(item_end));
        skip_trivia();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
      }
      value = Value::list(std::move(itemsv));
    } else if (c == '{') {
      // Object values stay raw strings.
      std::string raw = read_balanced_braces();
      value = Value::string(normalize_whitespace(raw));
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' &&
                std::isdigit(static_cast<unsigned char>(peek_char(1))))) {
      std::size_t j = pos_ + 1;
      bool is_float = false;
      while (j < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[j])) ||
              text_[j] == '.')) {
        if (text_[j] == '.') is_float = true;
        ++j;
      }
      std::string num(text_.substr(pos_, j - pos_));
      pos_ = j;
      value = is_float ? Value::floating(std::stod(num))
                       : Value::integer(std::stoll(num));
    } else if (c == '<' && peek_char(1) == '<') {
      value = parse_heredoc();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word = read_identifier();
      if (word == "true") {
        value = Value::boolean(true);
      } else if (word == "false") {
        value = Value::boolean(false);
      } else if (word == "null") {
        value = Value::null();
      } else if (pos_ < text_.size() &&
                 (text_[pos_] == '.' || text_[pos_] == '(' ||
                  text_[pos_] == '[')) {
        literal = false;  // reference or call, raw capture below
      } else {
        literal = false;  // bare identifier, e.g. a type name
      }
    } else {
      literal = false;
    }

    if (!literal) {
      // Raw capture to end of expression: newline or separator at depth 0.
      pos_ = expr_start;
      line_ = expr_line;
      std::string raw;
      int depth = 0;
      while (pos_ < text_.size()) {
        char rc = text_[pos_];
        if (depth == 0 &&
            (rc == '\n' || rc == ',' || rc == ']' || rc == '}')) {
          break;
        }
        if (rc == '"') {
          raw.push_back('"');
          raw += read_quoted(nullptr);
          raw.push_back('"');
          continue;
        }
        if (rc == '(' || rc == '[' || rc == '{') ++depth;
        if (rc == ')' || rc == ']' || rc == '}') --depth;
        raw.push_back(rc);
        ++pos_;
      }
      std::string trimmed = normalize_whitespace(raw);
      InterpolationMarker marker{0, static_cast<int>(trimmed.size()), true};
      value = Value::string(std::move(trimmed), {marker});
    }
    end_line = line_;
    return value;
  }

  std::string read_balanced_braces() {
    std::string raw;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '"') {
        raw.push_back('"');
        raw += read_quoted(nullptr);
        raw.push_back('"');
        continue;
      }
      if (c == '{') ++depth;
      if (c == '}') --depth;
      if (c == '\n') ++line_;
      raw.push_back(c);
      ++pos_;
      if (depth == 0) return raw;
    }
    fail("unterminated '{'", line_);
  }

  Value parse_heredoc() {
    pos_ += 2;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::string tag = read_identifier();
    if (tag.empty()) fail("malformed heredoc", line_);
    std::size_t eol = text_.find('\n', pos_);
    if (eol == std::string::npos) fail("unterminated heredoc", line_);
    pos_ = eol + 1;
    ++line_;
    std::string body;
    while (pos_ < text_.size()) {
      std::size_t line_end = text_.find('\n', pos_);
      if (line_end == std::string::npos) line_end = text_.size();
      std::string line_text(text_.substr(pos_, line_end - pos_));
      std::string trimmed = normalize_whitespace(line_text);
      pos_ = line_end < text_.size() ? line_end + 1 : line_end;
      ++line_;
      if (trimmed == tag) {
        std::vector<InterpolationMarker> markers;
        for (std::size_t i = 0; i + 1 < body.size(); ++i) {
          if (body[i] == '$' && body[i + 1] == '{') {
            std::size_t close = body.find('}', i + 2);
            if (close == std::string::npos) break;
            markers.push_back({static_cast<int>(i),
                               static_cast<int>(close + 1), true});
            i = close;
          }
        }
        return Value::string(body, std::move(markers));
      }
      if (!body.empty()) body.push_back('\n');
      body += line_text;
    }
    fail("unterminated heredoc", line_);
  }

  const SourceText& source_;
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::vector<Comment> comments_;
};

Attribute body_item_to_attribute(const SourceText& source, BodyItem& item) {
  Attribute attr;
  attr.name = item.name;
  attr.span = source.span(item.start_line, item.end_line);
  if (item.is_block) {
    for (BodyItem& child : item.body) {
      attr.nested.push_back(body_item_to_attribute(source, child));
    }
  } else {
    attr.value = std::move(item.value);
  }
  return attr;
}

Variable body_item_to_variable(const SourceText& source, BodyItem& item) {
  Variable var;
  var.name = item.name;
  var.span = source.span(item.start_line, item.end_line);
  if (item.is_block) {
    for (BodyItem& child : item.body) {
      var.nested.push_back(body_item_to_variable(source, child));
    }
  } else {
    var.value = std::move(item.value);
  }
  return var;
}

void add_unique_attribute(AtomicUnit& unit, Attribute attr,
                          std::vector<std::string>& warnings,
                          std::string_view path, int line) {
  for (const Attribute& existing : unit.attributes) {
    if (existing.name == attr.name) {
      warnings.push_back(std::string(path) + ":" + std::to_string(line) +
                         ": duplicate attribute '" + attr.name +
                         "' ignored");
      return;
    }
  }
  unit.attributes.push_back(std::move(attr));
}

}  // namespace

TechParseResult parse_terraform(std::string_view source,
                                std::string_view path) {
  SourceText text(std::string(path), source);
  TechParseResult result;
  UnitBlock& file = result.block;
  file.kind = UnitBlockKind::script;
  file.name = text.path();
  file.span = text.whole_file_span();

  HclParser parser(text);
  std::vector<Comment> comments;
  std::vector<BodyItem> items = parser.parse_file(comments);
  file.comments = std::move(comments);

  for (BodyItem& item : items) {
    if (!item.is_block) {
      // Loose top-level attribute: treat as a variable definition.
      file.variables.push_back(body_item_to_variable(text, item));
      continue;
    }
    if (item.name == "variable" && !item.labels.empty()) {
      Variable var;
      var.name = item.labels[0];
      var.span = text.span(item.start_line, item.end_line);
      for (BodyItem& child : item.body) {
        var.nested.push_back(body_item_to_variable(text, child));
      }
      file.variables.push_back(std::move(var));
      continue;
    }
    if (item.name == "locals") {
      for (BodyItem& child : item.body) {
        file.variables.push_back(body_item_to_variable(text, child));
      }
      continue;
    }
    // resource/data/provider/module/output/terraform blocks all become
    // atomic units; resource-shaped blocks keep their type and name.
    AtomicUnit unit;
    if (item.name == "resource" && item.labels.size() >= 2) {
      unit.type = item.labels[0];
      unit.name = item.labels[1];
    } else if (item.name == "data" && item.labels.size() >= 2) {
      unit.type = "data." + item.labels[0];
      unit.name = item.labels[1];
    } else {
      unit.type = item.name;
      unit.name = item.labels.empty() ? "" : item.labels[0];
    }
    unit.span = text.span(item.start_line, item.end_line);
    for (BodyItem& child : item.body) {
      add_unique_attribute(unit, body_item_to_attribute(text, child),
                           result.warnings, path, child.start_line);
    }
    file.atomic_units.push_back(std::move(unit));
  }
  return result;
}

}  // namespace iaclint
