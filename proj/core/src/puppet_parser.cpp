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

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iaclint/errors.hpp"
#include "iaclint/parsers.hpp"
#include "iaclint/source_text.hpp"

namespace iaclint {

namespace {

struct Token {
  enum class Kind {
    ident,
    variable,   // $name, text without the sigil
    number,
    sq_string,  // text is the unescaped content
    dq_string,
    lbrace,
    rbrace,
    lbrack,
    rbrack,
    lparen,
    rparen,
    colon,
    comma,
    arrow,   // =>
    equals,  // =
    question,
    eof,
  };
  Kind kind = Kind::eof;
  std::string text;
  std::vector<InterpolationMarker> markers;  // dq_string only
  int line = 1;
  int end_line = 1;
  std::size_t offset = 0;  // byte offset of the token start
};

struct PendingComment {
  std::string text;
  int line = 1;
};

/// Finds `${name}` and bare `$name` references; offsets are into `content`.
std::vector<InterpolationMarker> scan_dollar_markers(std::string_view content) {
  std::vector<InterpolationMarker> markers;
  for (std::size_t i = 0; i < content.size(); ++i) {
    if (content[i] != '$') continue;
    if (i > 0 && content[i - 1] == '\\') continue;
    if (i + 1 < content.size() && content[i + 1] == '{') {
      std::size_t close = content.find('}', i + 2);
      if (close == std::string_view::npos) continue;
      markers.push_back({static_cast<int>(i), static_cast<int>(close + 1),
                         /*braced=*/true});
      i = close;
      continue;
    }
    std::size_t j = i + 1;
    while (j < content.size() &&
           (std::isalnum(static_cast<unsigned char>(content[j])) ||
            content[j] == '_' || content[j] == ':')) {
      ++j;
    }
    if (j > i + 1) {
      markers.push_back(
          {static_cast<int>(i), static_cast<int>(j), /*braced=*/false});
      i = j - 1;
    }
  }
  return markers;
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string_view path)
      : text_(text), path_(path) {}

  const std::vector<PendingComment>& comments() const { return comments_; }
  int line() const { return line_; }
  std::size_t offset() const { return pos_; }

  Token& peek() {
    if (!lookahead_) lookahead_ = lex();
    return *lookahead_;
  }

  Token next() {
    if (lookahead_) {
      Token t = std::move(*lookahead_);
      lookahead_.reset();
      return t;
    }
    return lex();
  }

  [[noreturn]] void fail(const std::string& message, int line) const {
    throw ParseError(std::string(path_) + ":" + std::to_string(line) + ": " +
                     message);
  }

  /// Raw text from the current position until `stop` at top level (quotes
  /// and bracket nesting respected). The stop character is not consumed.
  std::string raw_until(char stop, int& end_line) {
    if (lookahead_) {
      // Rewind the lookahead; raw capture starts at its first byte.
      pos_ = lookahead_->offset;
      line_ = lookahead_->line;
      lookahead_.reset();
    }
    std::string out;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (depth == 0 && c == stop) break;
      if (c == '\'' || c == '"') {
        out += consume_quoted_raw(c);
        continue;
      }
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      if (c == '\n') ++line_;
      out.push_back(c);
      ++pos_;
    }
    if (pos_ >= text_.size()) fail("unexpected end of file", line_);
    end_line = line_;
    return out;
  }

  /// Raw capture starting at `from` through the matching close brace of the
  /// next '{'. Used for hash values and selectors.
  std::string raw_braced_from(std::size_t from, int from_line, int& end_line) {
    pos_ = from;
    line_ = from_line;
    lookahead_.reset();
    std::string out;
    int depth = 0;
    bool seen_open = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\'' || c == '"') {
        out += consume_quoted_raw(c);
        continue;
      }
      if (c == '{') {
        ++depth;
        seen_open = true;
      } else if (c == '}') {
        --depth;
      } else if (c == '\n') {
        ++line_;
      }
      out.push_back(c);
      ++pos_;
      if (seen_open && depth == 0) {
        end_line = line_;
        return out;
      }
    }
    fail("unterminated brace", from_line);
  }

 private:
  std::string consume_quoted_raw(char quote) {
    std::string out;
    out.push_back(quote);
    ++pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      out.push_back(c);
      ++pos_;
      if (c == '\n') ++line_;
      if (c == '\\' && quote == '"' && pos_ < text_.size()) {
        out.push_back(text_[pos_]);
        ++pos_;
        continue;
      }
      if (c == quote) break;
    }
    return out;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        std::size_t eol = text_.find('\n', pos_);
        if (eol == std::string_view::npos) eol = text_.size();
        std::string body(text_.substr(pos_ + 1, eol - pos_ - 1));
        std::string trimmed = normalize_whitespace(body);
        if (!trimmed.empty()) comments_.push_back({std::string(body), line_});
        pos_ = eol;
      } else {
        return;
      }
    }
  }

  Token lex() {
    skip_trivia();
    Token tok;
    tok.line = line_;
    tok.end_line = line_;
    tok.offset = pos_;
    if (pos_ >= text_.size()) {
      tok.kind = Token::Kind::eof;
      return tok;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = pos_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) ||
              text_[j] == '_' || text_[j] == ':' || text_[j] == '-')) {
        // '::' scope separators are part of puppet names; a ':' not
        // followed by another ':' terminates the identifier.
        if (text_[j] == ':' &&
            !(j + 1 < text_.size() && text_[j + 1] == ':')) {
          break;
        }
        if (text_[j] == ':') ++j;  // consume both ':' of '::'
        ++j;
      }
      tok.kind = Token::Kind::ident;
      tok.text = std::string(text_.substr(pos_, j - pos_));
      pos_ = j;
      return tok;
    }
    if (c == '$') {
      std::size_t j = pos_ + 1;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) ||
              text_[j] == '_' || text_[j] == ':')) {
        ++j;
      }
      tok.kind = Token::Kind::variable;
      tok.text = std::string(text_.substr(pos_ + 1, j - pos_ - 1));
      pos_ = j;
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = pos_;
      bool is_float = false;
      while (j < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[j])) ||
              text_[j] == '.')) {
        if (text_[j] == '.') is_float = true;
        ++j;
      }
      tok.kind = Token::Kind::number;
      tok.text = std::string(text_.substr(pos_, j - pos_));
      tok.markers.clear();
      pos_ = j;
      // Reuse text verbatim; the parser decides int vs float.
      (void)is_float;
      return tok;
    }
    if (c == '\'' || c == '"') {
      bool dq = c == '"';
      ++pos_;
      std::string content;
      while (pos_ < text_.size() && text_[pos_] != c) {
        char ch = text_[pos_];
        if (ch == '\\' && pos_ + 1 < text_.size()) {
          char esc = text_[pos_ + 1];
          if (esc == c || esc == '\\') {
            content.push_back(esc);
            pos_ += 2;
            continue;
          }
        }
        if (ch == '\n') ++line_;
        content.push_back(ch);
        ++pos_;
      }
      if (pos_ >= text_.size()) fail("unterminated string", tok.line);
      ++pos_;  // closing quote
      tok.kind = dq ? Token::Kind::dq_string : Token::Kind::sq_string;
      tok.text = std::move(content);
      if (dq) tok.markers = scan_dollar_markers(tok.text);
      tok.end_line = line_;
      return tok;
    }
    if (c == '=' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok.kind = Token::Kind::arrow;
      pos_ += 2;
      return tok;
    }
    const auto single = [&](Token::Kind kind) {
      tok.kind = kind;
      ++pos_;
      return tok;
    };
    switch (c) {
      case '{':
        return single(Token::Kind::lbrace);
      case '}':
        return single(Token::Kind::rbrace);
      case '[':
        return single(Token::Kind::lbrack);
      case ']':
        return single(Token::Kind::rbrack);
      case '(':
        return single(Token::Kind::lparen);
      case ')':
        return single(Token::Kind::rparen);
      case ':':
        return single(Token::Kind::colon);
      case ',':
        return single(Token::Kind::comma);
      case '=':
        return single(Token::Kind::equals);
      case '?':
        return single(Token::Kind::question);
      case '-': {
        // Negative number literal.
        if (pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
          ++pos_;
          Token num = lex();
          num.text.insert(num.text.begin(), '-');
          num.line = tok.line;
          num.offset = tok.offset;
          return num;
        }
        break;
      }
      default:
        break;
    }
    fail(std::string("unexpected character '") + c + "'", line_);
  }

  std::string_view text_;
  std::string_view path_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::optional<Token> lookahead_;
  std::vector<PendingComment> comments_;
};

class PuppetParser {
 public:
  PuppetParser(const SourceText& source, std::vector<std::string>& warnings)
      : source_(source),
        lexer_(source.text(), source.path()),
        warnings_(warnings) {}

  UnitBlock parse() {
    UnitBlock file;
    file.kind = UnitBlockKind::script;
    file.name = source_.path();
    parse_items(file, /*stop_at_rbrace=*/false);
    file.span = source_.whole_file_span();
    distribute_comments(file);
    return file;
  }

 private:
  void parse_items(UnitBlock& parent, bool stop_at_rbrace) {
    while (true) {
      Token& tok = lexer_.peek();
      if (tok.kind == Token::Kind::eof) {
        if (stop_at_rbrace) lexer_.fail("unexpected end of file", tok.line);
        return;
      }
      if (tok.kind == Token::Kind::rbrace && stop_at_rbrace) return;
      if (tok.kind == Token::Kind::ident) {
        if (tok.text == "class" || tok.text == "define") {
          parse_class_like(parent);
        } else if (tok.text == "if" || tok.text == "unless") {
          parse_conditional(parent);
        } else if (tok.text == "case") {
          parse_case(parent);
        } else {
          parse_resource(parent);
        }
        continue;
      }
      if (tok.kind == Token::Kind::variable) {
        parse_assignment(parent);
        continue;
      }
      lexer_.fail("unsupported construct", tok.line);
    }
  }

  void parse_class_like(UnitBlock& parent) {
    Token keyword = lexer_.next();
    Token name = expect(Token::Kind::ident, "class name");
    UnitBlock block;
    block.kind = UnitBlockKind::class_like;
    block.name = name.text;
    int start_line = keyword.line;
    if (lexer_.peek().kind == Token::Kind::lparen) {
      lexer_.next();
      parse_parameters(block);
    }
    if (lexer_.peek().kind == Token::Kind::ident &&
        lexer_.peek().text == "inherits") {
      lexer_.next();
      expect(Token::Kind::ident, "parent class name");
    }
    expect(Token::Kind::lbrace, "'{'");
    parse_items(block, /*stop_at_rbrace=*/true);
    Token close = expect(Token::Kind::rbrace, "'}'");
    block.span = source_.span(start_line, close.line);
    parent.nested_blocks.push_back(std::move(block));
  }

  void parse_parameters(UnitBlock& block) {
    while (true) {
      Token& tok = lexer_.peek();
      if (tok.kind == Token::Kind::rparen) {
        lexer_.next();
        return;
      }
      if (tok.kind == Token::Kind::ident) {
        // Optional type annotation, e.g. `String $name`.
        lexer_.next();
        continue;
      }
      Token name = expect(Token::Kind::variable, "parameter");
      Variable var;
      var.name = name.text;
      int end_line = name.line;
      if (lexer_.peek().kind == Token::Kind::equals) {
        lexer_.next();
        var.value = parse_value(end_line);
      }
      var.span = source_.span(name.line, end_line);
      block.variables.push_back(std::move(var));
      if (lexer_.peek().kind == Token::Kind::comma) lexer_.next();
    }
  }

  void parse_conditional(UnitBlock& parent) {
    Token keyword = lexer_.next();  // if | unless | elsif
    int cond_end = keyword.line;
    std::string condition = normalize_whitespace(lexer_.raw_until('{', cond_end));
    expect(Token::Kind::lbrace, "'{'");
    UnitBlock block;
    block.kind = UnitBlockKind::block;
    block.name = keyword.text + " " + condition;
    parse_items(block, /*stop_at_rbrace=*/true);
    Token close = expect(Token::Kind::rbrace, "'}'");
    int end_line = close.line;
    while (lexer_.peek().kind == Token::Kind::ident &&
           (lexer_.peek().text == "elsif" || lexer_.peek().text == "else")) {
      Token branch_kw = lexer_.next();
      UnitBlock branch;
      branch.kind = UnitBlockKind::block;
      if (branch_kw.text == "elsif") {
        int branch_cond_end = branch_kw.line;
        branch.name = "elsif " + normalize_whitespace(
                                     lexer_.raw_until('{', branch_cond_end));
      } else {
        branch.name = "else";
      }
      expect(Token::Kind::lbrace, "'{'");
      parse_items(branch, /*stop_at_rbrace=*/true);
      Token branch_close = expect(Token::Kind::rbrace, "'}'");
      branch.span = source_.span(branch_kw.line, branch_close.line);
      end_line = branch_close.line;
      bool was_else = branch.name == "else";
      block.nested_blocks.push_back(std::move(branch));
      if (was_else) break;
    }
    block.span = source_.span(keyword.line, end_line);
    parent.nested_blocks.push_back(std::move(block));
  }

  void parse_case(UnitBlock& parent) {
    Token keyword = lexer_.next();
    int cond_end = keyword.line;
    std::string control = normalize_whitespace(lexer_.raw_until('{', cond_end));
    expect(Token::Kind::lbrace, "'{'");
    UnitBlock block;
    block.kind = UnitBlockKind::block;
    block.name = "case " + control;
    block.is_case_block = true;
    while (lexer_.peek().kind != Token::Kind::rbrace) {
      if (lexer_.peek().kind == Token::Kind::eof) {
        lexer_.fail("unterminated case block", keyword.line);
      }
      int label_line = lexer_.peek().line;
      int label_end = label_line;
      std::string label = normalize_whitespace(lexer_.raw_until(':', label_end));
      expect(Token::Kind::colon, "':'");
      if (label == "default") block.has_default_branch = true;
      expect(Token::Kind::lbrace, "'{'");
      UnitBlock branch;
      branch.kind = UnitBlockKind::block;
      branch.name = label;
      parse_items(branch, /*stop_at_rbrace=*/true);
      Token branch_close = expect(Token::Kind::rbrace, "'}'");
      branch.span = source_.span(label_line, branch_close.line);
      block.nested_blocks.push_back(std::move(branch));
    }
    Token close = expect(Token::Kind::rbrace, "'}'");
    block.span = source_.span(keyword.line, close.line);
    parent.nested_blocks.push_back(std::move(block));
  }

  void parse_resource(UnitBlock& parent) {
    Token type = expect(Token::Kind::ident, "resource type");
    if (!std::islower(static_cast<unsigned char>(type.text[0])) &&
        type.text[0] != '_') {
      lexer_.fail("unsupported construct '" + type.text + "'", type.line);
    }
    expect(Token::Kind::lbrace, "'{'");
    Token title = lexer_.next();
    std::string title_text;
    switch (title.kind) {
      case Token::Kind::sq_string:
      case Token::Kind::dq_string:
      case Token::Kind::ident:
        title_text = title.text;
        break;
      default:
        lexer_.fail("expected resource title", title.line);
    }
    expect(Token::Kind::colon, "':'");
    AtomicUnit unit;
    unit.type = type.text;
    unit.name = title_text;
    while (lexer_.peek().kind != Token::Kind::rbrace) {
      Token name = lexer_.next();
      if (name.kind != Token::Kind::ident) {
        lexer_.fail("expected attribute name", name.line);
      }
      expect(Token::Kind::arrow, "'=>'");
      int value_end = name.line;
      Attribute attr;
      attr.name = name.text;
      attr.value = parse_value(value_end);
      attr.span = source_.span(name.line, value_end);
      bool duplicate = false;
      for (const Attribute& existing : unit.attributes) {
        if (existing.name == attr.name) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) {
        warnings_.push_back(source_.path() + ":" + std::to_string(name.line) +
                            ": duplicate attribute '" + attr.name +
                            "' ignored");
      } else {
        unit.attributes.push_back(std::move(attr));
      }
      if (lexer_.peek().kind == Token::Kind::comma) {
        lexer_.next();
      } else if (lexer_.peek().kind != Token::Kind::rbrace) {
        lexer_.fail("expected ',' or '}'", lexer_.peek().line);
      }
    }
    Token close = expect(Token::Kind::rbrace, "'}'");
    unit.span = source_.span(type.line, close.line);
    parent.atomic_units.push_back(std::move(unit));
  }

  void parse_assignment(UnitBlock& parent) {
    Token name = lexer_.next();
    expect(Token::Kind::equals, "'='");
    Variable var;
    var.name = name.text;
    int end_line = name.line;
    var.value = parse_value(end_line);
    var.span = source_.span(name.line, end_line);
    parent.variables.push_back(std::move(var));
  }

  Value parse_value(int& end_line) {
    Token& ahead = lexer_.peek();
    std::size_t value_offset = ahead.offset;
    int value_line = ahead.line;
    Value value = parse_value_atom(end_line);
    if (lexer_.peek().kind == Token::Kind::question) {
      // Selector: keep the whole expression as a raw string.
      int raw_end = value_line;
      std::string raw =
          lexer_.raw_braced_from(value_offset, value_line, raw_end);
      end_line = raw_end;
      return Value::string(normalize_whitespace(raw));
    }
    return value;
  }

  Value parse_value_atom(int& end_line) {
    Token tok = lexer_.next();
    end_line = tok.end_line;
    switch (tok.kind) {
      case Token::Kind::sq_string:
        return Value::string(tok.text);
      case Token::Kind::dq_string:
        return Value::string(tok.text, tok.markers);
      case Token::Kind::number:
        if (tok.text.find('.') != std::string::npos) {
          return Value::floating(std::stod(tok.text));
        }
        return Value::integer(std::stoll(tok.text));
      case Token::Kind::variable: {
        std::string text = "$" + tok.text;
        InterpolationMarker marker{0, static_cast<int>(text.size()), true};
        return Value::string(std::move(text), {marker});
      }
      case Token::Kind::ident: {
        if (tok.text == "true") return Value::boolean(true);
        if (tok.text == "false") return Value::boolean(false);
        if (tok.text == "undef") return Value::null();
        if (lexer_.peek().kind == Token::Kind::lparen) {
          // Function call kept raw, e.g. template('x').
          std::string raw = tok.text;
          int depth = 0;
          do {
            Token t = lexer_.next();
            end_line = t.end_line;
            if (t.kind == Token::Kind::lparen) {
              ++depth;
              raw += "(";
            } else if (t.kind == Token::Kind::rparen) {
              --depth;
              raw += ")";
            } else if (t.kind == Token::Kind::comma) {
              raw += ", ";
            } else if (t.kind == Token::Kind::sq_string) {
              raw += "'" + t.text + "'";
            } else if (t.kind == Token::Kind::dq_string) {
              raw += "\"" + t.text + "\"";
            } else if (t.kind == Token::Kind::eof) {
              lexer_.fail("unterminated call", tok.line);
            } else {
              raw += t.text;
            }
          } while (depth > 0);
          return Value::string(std::move(raw));
        }
        return Value::string(tok.text);  // bareword
      }
      case Token::Kind::lbrack: {
        std::vector<Value> items;
        while (lexer_.peek().kind != Token::Kind::rbrack) {
          int item_end = end_line;
          items.push_back(parse_value(item_end));
          end_line = item_end;
          if (lexer_.peek().kind == Token::Kind::comma) lexer_.next();
        }
        Token close = lexer_.next();
        end_line = close.end_line;
        return Value::list(std::move(items));
      }
      case Token::Kind::lbrace: {
        // Hash values stay raw strings.
        int raw_end = tok.line;
        std::string raw = lexer_.raw_braced_from(tok.offset, tok.line, raw_end);
        end_line = raw_end;
        return Value::string(normalize_whitespace(raw));
      }
      default:
        lexer_.fail("expected a value", tok.line);
    }
  }

  Token expect(Token::Kind kind, const std::string& what) {
    Token tok = lexer_.next();
    if (tok.kind != kind) {
      lexer_.fail("expected " + what, tok.line);
    }
    return tok;
  }

  /// Attaches each comment to the deepest unit block whose span contains it.
  void distribute_comments(UnitBlock& file) {
    for (const PendingComment& pc : lexer_.comments()) {
      UnitBlock* target = &file;
      bool descended = true;
      while (descended) {
        descended = false;
        for (UnitBlock& nested : target->nested_blocks) {
          if (pc.line >= nested.span.start_line &&
              pc.line <= nested.span.end_line) {
            target = &nested;
            descended = true;
            break;
          }
        }
      }
      Comment comment;
      comment.text = normalize_whitespace(pc.text);
      comment.span = source_.span(pc.line, pc.line);
      target->comments.push_back(std::move(comment));
    }
  }

  const SourceText& source_;
  Lexer lexer_;
  std::vector<std::string>& warnings_;
};

}  // namespace

TechParseResult parse_puppet(std::string_view source, std::string_view path) {
  SourceText text(std::string(path), source);
  TechParseResult result;
  PuppetParser parser(text, result.warnings);
  result.block = parser.parse();
  return result;
}

}  // namespace iaclint
