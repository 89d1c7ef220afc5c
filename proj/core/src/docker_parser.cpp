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

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "iaclint/errors.hpp"
#include "iaclint/parsers.hpp"
#include "iaclint/shell_split.hpp"
#include "iaclint/source_text.hpp"

namespace iaclint {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string to_upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::toupper(c));
  });
  return out;
}

const char* const kInstructions[] = {
    "FROM",       "RUN",      "CMD",        "LABEL",   "MAINTAINER",
    "EXPOSE",     "ENV",      "ADD",        "COPY",    "ENTRYPOINT",
    "VOLUME",     "USER",     "WORKDIR",    "ARG",     "ONBUILD",
    "STOPSIGNAL", "HEALTHCHECK", "SHELL"};

bool is_known_instruction(std::string_view word) {
  for (const char* instr : kInstructions) {
    if (word == instr) return true;
  }
  return false;
}

/// `$VAR` and `${VAR}` substitution markers.
std::vector<InterpolationMarker> scan_docker_markers(std::string_view text) {
  std::vector<InterpolationMarker> markers;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '$') continue;
    if (i > 0 && text[i - 1] == '\\') continue;
    if (i + 1 < text.size() && text[i + 1] == '{') {
      std::size_t close = text.find('}', i + 2);
      if (close == std::string_view::npos) continue;
      markers.push_back({static_cast<int>(i), static_cast<int>(close + 1),
                         /*braced=*/true});
      i = close;
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[j])) ||
            text[j] == '_')) {
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

Value docker_value(std::string text) {
  auto markers = scan_docker_markers(text);
  return Value::string(std::move(text), std::move(markers));
}

/// Splits `k=v k2="v 2"` pairs (ENV/LABEL forms).
std::vector<std::pair<std::string, std::string>> split_pairs(
    std::string_view args) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t i = 0;
  while (i < args.size()) {
    while (i < args.size() &&
           std::isspace(static_cast<unsigned char>(args[i]))) {
      ++i;
    }
    if (i >= args.size()) break;
    std::size_t eq = i;
    while (eq < args.size() && args[eq] != '=' &&
           !std::isspace(static_cast<unsigned char>(args[eq]))) {
      ++eq;
    }
    if (eq >= args.size() || args[eq] != '=') break;
    std::string key(args.substr(i, eq - i));
    i = eq + 1;
    std::string value;
    if (i < args.size() && (args[i] == '"' || args[i] == '\'')) {
      char quote = args[i++];
      while (i < args.size() && args[i] != quote) {
        if (args[i] == '\\' && i + 1 < args.size()) ++i;
        value.push_back(args[i++]);
      }
      if (i < args.size()) ++i;
    } else {
      while (i < args.size() &&
             !std::isspace(static_cast<unsigned char>(args[i]))) {
        value.push_back(args[i++]);
      }
    }
    pairs.emplace_back(std::move(key), std::move(value));
  }
  return pairs;
}

std::vector<std::string> split_words(std::string_view args) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < args.size()) {
    while (i < args.size() &&
           std::isspace(static_cast<unsigned char>(args[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < args.size() &&
           !std::isspace(static_cast<unsigned char>(args[i]))) {
      ++i;
    }
    if (i > start) words.emplace_back(args.substr(start, i - start));
  }
  return words;
}

struct Instruction {
  std::string word;  // canonical uppercase
  std::string args;
  int start_line = 1;
  int end_line = 1;
};

struct StageBuilder {
  UnitBlock block;
  int start_line = 1;
  int last_line = 1;
};

}  // namespace

TechParseResult parse_docker(std::string_view source, std::string_view path) {
  SourceText text(std::string(path), source);
  TechParseResult result;
  UnitBlock& file = result.block;
  file.kind = UnitBlockKind::script;
  file.name = text.path();
  file.span = text.whole_file_span();

  // Pass 1: comments and logical instructions (continuations joined).
  std::vector<Instruction> instructions;
  struct RawComment {
    std::string body;
    int line;
  };
  std::vector<RawComment> comments;
  int line_no = 1;
  const int line_count = text.line_count();
  while (line_no <= line_count) {
    std::string line = trim(text.line(line_no));
    if (line.empty()) {
      ++line_no;
      continue;
    }
    if (line[0] == '#') {
      comments.push_back({line.substr(1), line_no});
      ++line_no;
      continue;
    }
    Instruction instr;
    instr.start_line = line_no;
    std::string assembled;
    while (line_no <= line_count) {
      std::string_view raw = text.line(line_no);
      std::string piece = trim(raw);
      if (piece.size() >= 1 && piece[0] == '#' && !assembled.empty()) {
        // Comment line inside a continuation.
        comments.push_back({piece.substr(1), line_no});
        ++line_no;
        continue;
      }
      bool continues = piece.ends_with("\\");
      if (continues) piece = trim(piece.substr(0, piece.size() - 1));
      if (!assembled.empty() && !piece.empty()) assembled += " ";
      assembled += piece;
      instr.end_line = line_no;
      ++line_no;
      if (!continues) break;
    }
    std::size_t space = assembled.find_first_of(" \t");
    std::string word =
        space == std::string::npos ? assembled : assembled.substr(0, space);
    instr.word = to_upper(word);
    instr.args =
        space == std::string::npos ? "" : trim(assembled.substr(space + 1));
    if (!is_known_instruction(instr.word)) {
      result.warnings.push_back(std::string(path) + ":" +
                                std::to_string(instr.start_line) +
                                ": unknown instruction '" + word + "'");
    }
    instructions.push_back(std::move(instr));
  }

  // Pass 2: group instructions into build stages.
  std::vector<StageBuilder> stages;
  const auto ensure_stage = [&](int line) -> StageBuilder& {
    if (stages.empty()) {
      // Synthetic stage for instructions preceding the first FROM.
      StageBuilder builder;
      builder.block.kind = UnitBlockKind::build_stage;
      builder.block.name = "stage-0";
      builder.start_line = line;
      builder.last_line = line;
      stages.push_back(std::move(builder));
    }
    return stages.back();
  };

  bool seen_from = false;
  for (const Instruction& instr : instructions) {
    if (instr.word == "FROM") {
      if (instr.args.empty()) {
        throw ParseError(std::string(path) + ":" +
                         std::to_string(instr.start_line) +
                         ": FROM requires an image");
      }
      std::vector<std::string> words = split_words(instr.args);
      std::string alias;
      for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        if (to_upper(words[i]) == "AS") alias = words[i + 1];
      }
      StageBuilder builder;
      builder.block.kind = UnitBlockKind::build_stage;
      builder.block.name =
          alias.empty() ? "stage-" + std::to_string(stages.size()) : alias;
      builder.start_line = instr.start_line;
      builder.last_line = instr.end_line;
      stages.push_back(std::move(builder));
      seen_from = true;
      continue;
    }
    if (!seen_from && instr.word == "ARG") {
      // Build-time arguments may precede the first FROM; they belong to
      // the file itself.
      std::vector<std::string> words = split_words(instr.args);
      if (!words.empty()) {
        std::string decl = words[0];
        std::size_t eq = decl.find('=');
        Variable var;
        var.name = eq == std::string::npos ? decl : decl.substr(0, eq);
        if (eq != std::string::npos) {
          var.value = docker_value(decl.substr(eq + 1));
        }
        var.span = text.span(instr.start_line, instr.end_line);
        file.variables.push_back(std::move(var));
      }
      continue;
    }
    if (!seen_from && stages.empty()) {
      result.warnings.push_back(std::string(path) + ":" +
                                std::to_string(instr.start_line) + ": " +
                                instr.word + " before any FROM");
    }
    StageBuilder& stage = ensure_stage(instr.start_line);
    stage.last_line = std::max(stage.last_line, instr.end_line);
    UnitBlock& block = stage.block;
    SourceSpan span = text.span(instr.start_line, instr.end_line);

    if (instr.word == "ENV") {
      auto pairs = split_pairs(instr.args);
      if (pairs.empty()) {
        // Legacy space-separated form: ENV key value.
        std::vector<std::string> words = split_words(instr.args);
        if (words.size() >= 2) {
          std::string rest = trim(instr.args.substr(words[0].size()));
          Variable var;
          var.name = words[0];
          var.value = docker_value(rest);
          var.span = span;
          block.variables.push_back(std::move(var));
        }
      } else {
        for (auto& [key, value] : pairs) {
          Variable var;
          var.name = key;
          var.value = docker_value(value);
          var.span = span;
          block.variables.push_back(std::move(var));
        }
      }
      continue;
    }
    if (instr.word == "ARG") {
      std::vector<std::string> words = split_words(instr.args);
      if (!words.empty()) {
        std::string decl = words[0];
        std::size_t eq = decl.find('=');
        Variable var;
        var.name = eq == std::string::npos ? decl : decl.substr(0, eq);
        if (eq != std::string::npos) {
          var.value = docker_value(decl.substr(eq + 1));
        }
        var.span = span;
        block.variables.push_back(std::move(var));
      }
      continue;
    }
    if (instr.word == "RUN") {
      std::string shell = instr.args;
      if (!shell.empty() && shell.front() == '[') {
        // Exec form: a JSON array.
        auto parsed =
            nlohmann::json::parse(shell, /*cb=*/nullptr, /*throw=*/false);
        if (parsed.is_array() && !parsed.empty() && parsed[0].is_string()) {
          AtomicUnit unit;
          unit.type = parsed[0].get<std::string>();
          std::string exec_args;
          for (std::size_t i = 1; i < parsed.size(); ++i) {
            if (!parsed[i].is_string()) continue;
            if (!exec_args.empty()) exec_args += " ";
            exec_args += parsed[i].get<std::string>();
          }
          Attribute attr;
          attr.name = "args";
          attr.value = docker_value(exec_args);
          attr.span = span;
          unit.attributes.push_back(std::move(attr));
          unit.span = span;
          block.atomic_units.push_back(std::move(unit));
          continue;
        }
        result.warnings.push_back(std::string(path) + ":" +
                                  std::to_string(instr.start_line) +
                                  ": malformed exec form");
        continue;
      }
      for (const std::string& statement :
           split_shell_statements(shell, /*split_on_pipe=*/false)) {
        AtomicUnit unit;
        unit.type = shell_first_word(statement);
        std::size_t ws = statement.find_first_of(" \t");
        std::string rest =
            ws == std::string::npos ? "" : trim(statement.substr(ws));
        Attribute attr;
        attr.name = "args";
        attr.value = docker_value(rest);
        attr.span = span;
        unit.attributes.push_back(std::move(attr));
        unit.span = span;
        block.atomic_units.push_back(std::move(unit));
      }
      continue;
    }

    // Remaining instructions become atomic units typed by instruction.
    AtomicUnit unit;
    unit.type = instr.word;
    unit.span = span;
    const auto add_attr = [&](std::string name, std::string value) {
      for (const Attribute& existing : unit.attributes) {
        if (existing.name == name) {
          result.warnings.push_back(std::string(path) + ":" +
                                    std::to_string(instr.start_line) +
                                    ": duplicate attribute '" + name +
                                    "' ignored");
          return;
        }
      }
      Attribute attr;
      attr.name = std::move(name);
      attr.value = docker_value(std::move(value));
      attr.span = span;
      unit.attributes.push_back(std::move(attr));
    };
    if (instr.word == "COPY" || instr.word == "ADD") {
      std::vector<std::string> words = split_words(instr.args);
      std::vector<std::string> operands;
      for (const std::string& w : words) {
        if (w.rfind("--", 0) == 0) {
          std::size_t eq = w.find('=');
          if (eq != std::string::npos) {
            add_attr(w.substr(2, eq - 2), w.substr(eq + 1));
          }
          continue;
        }
        operands.push_back(w);
      }
      if (operands.size() >= 2) {
        std::string src;
        for (std::size_t i = 0; i + 1 < operands.size(); ++i) {
          if (!src.empty()) src += " ";
          src += operands[i];
        }
        add_attr("src", src);
        add_attr("dest", operands.back());
      } else {
        add_attr("args", instr.args);
      }
    } else if (instr.word == "EXPOSE") {
      add_attr("ports", instr.args);
    } else if (instr.word == "USER") {
      add_attr("user", instr.args);
    } else if (instr.word == "WORKDIR") {
      add_attr("path", instr.args);
    } else if (instr.word == "LABEL") {
      for (auto& [key, value] : split_pairs(instr.args)) {
        add_attr(key, value);
      }
    } else {
      add_attr("args", instr.args);
    }
    block.atomic_units.push_back(std::move(unit));
  }

  // Close stage spans and attach them.
  for (std::size_t i = 0; i < stages.size(); ++i) {
    StageBuilder& stage = stages[i];
    stage.block.span = text.span(stage.start_line, stage.last_line);
    file.nested_blocks.push_back(std::move(stage.block));
  }

  // Comments attach to the deepest block containing their line.
  for (const RawComment& rc : comments) {
    std::string comment_text = normalize_whitespace(rc.body);
    if (comment_text.empty()) continue;
    UnitBlock* target = &file;
    for (UnitBlock& stage : file.nested_blocks) {
      if (rc.line >= stage.span.start_line && rc.line <= stage.span.end_line) {
        target = &stage;
        break;
      }
    }
    Comment comment;
    comment.text = std::move(comment_text);
    comment.span = text.span(rc.line, rc.line);
    target->comments.push_back(std::move(comment));
  }
  return result;
}

}  // namespace iaclint
