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
// YAML structure comes from yaml-cpp; comments are recovered by a raw-line
// scan because the YAML reader drops them.

#include <cctype>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "iaclint/errors.hpp"
#include "iaclint/parsers.hpp"
#include "iaclint/source_text.hpp"

namespace iaclint {

namespace {

// Task keys that are not module invocations.
const char* const kTaskKeywords[] = {
    "name",          "when",         "register",     "loop",
    "until",         "retries",      "delay",        "become",
    "become_user",   "become_method","become_flags", "tags",
    "vars",          "notify",       "changed_when", "failed_when",
    "ignore_errors", "environment",  "delegate_to",  "run_once",
    "args",          "no_log",       "listen",       "connection",
    "remote_user",   "gather_facts", "serial",       "strategy",
    "any_errors_fatal", "throttle",  "timeout",      "check_mode",
    "diff",          "module_defaults", "collections", "loop_control",
    "block",         "rescue",       "always"};

bool is_task_keyword(const std::string& key) {
  if (key.rfind("with_", 0) == 0) return true;
  for (const char* kw : kTaskKeywords) {
    if (key == kw) return true;
  }
  return false;
}

const char* const kTaskListKeys[] = {"tasks", "pre_tasks", "post_tasks",
                                     "handlers"};

bool is_task_list_key(const std::string& key) {
  for (const char* k : kTaskListKeys) {
    if (key == k) return true;
  }
  return false;
}

int mark_line(const YAML::Node& node) {
  return node.Mark().line >= 0 ? node.Mark().line + 1 : 1;
}

int max_line(const YAML::Node& node, int depth = 0) {
  int best = mark_line(node);
  if (depth > 64) return best;
  if (node.IsSequence()) {
    for (const auto& child : node) {
      best = std::max(best, max_line(child, depth + 1));
    }
  } else if (node.IsMap()) {
    for (const auto& kv : node) {
      best = std::max(best, max_line(kv.first, depth + 1));
      best = std::max(best, max_line(kv.second, depth + 1));
    }
  }
  return best;
}

/// `{{ ... }}` template expressions.
std::vector<InterpolationMarker> scan_jinja_markers(std::string_view text) {
  std::vector<InterpolationMarker> markers;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] == '{' && text[i + 1] == '{') {
      std::size_t close = text.find("}}", i + 2);
      if (close == std::string_view::npos) break;
      markers.push_back({static_cast<int>(i), static_cast<int>(close + 2),
                         /*braced=*/true});
      i = close + 1;
    }
  }
  return markers;
}

bool parse_integer(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (i >= s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  try {
    out = std::stoll(s);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

bool parse_float(const std::string& s, double& out) {
  if (s.empty()) return false;
  std::size_t consumed = 0;
  try {
    out = std::stod(s, &consumed);
  } catch (const std::exception&) {
    return false;
  }
  return consumed == s.size();
}

Value yaml_to_value(const YAML::Node& node, int depth = 0);

Value scalar_to_value(const YAML::Node& node) {
  const std::string& s = node.Scalar();
  // Tag "!" marks quoted scalars: always strings.
  if (node.Tag() != "!") {
    std::string lower;
    lower.reserve(s.size());
    for (char c : s) {
      lower.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (lower == "null" || lower == "~" || lower.empty()) return Value::null();
    if (lower == "true" || lower == "yes" || lower == "on") {
      return Value::boolean(true);
    }
    if (lower == "false" || lower == "no" || lower == "off") {
      return Value::boolean(false);
    }
    std::int64_t i = 0;
    if (parse_integer(s, i)) return Value::integer(i);
    double d = 0;
    if (parse_float(s, d)) return Value::floating(d);
  }
  return Value::string(s, scan_jinja_markers(s));
}

Value yaml_to_value(const YAML::Node& node, int depth) {
  if (depth > 64 || !node || node.IsNull()) return Value::null();
  if (node.IsScalar()) return scalar_to_value(node);
  if (node.IsSequence()) {
    std::vector<Value> items;
    for (const auto& child : node) {
      items.push_back(yaml_to_value(child, depth + 1));
    }
    return Value::list(std::move(items));
  }
  return Value::null();  // maps are modeled as nested attributes/variables
}

Attribute to_attribute(const SourceText& text, const std::string& key,
                       const YAML::Node& value, int key_line, int depth = 0) {
  Attribute attr;
  attr.name = key;
  attr.span = text.span(key_line, std::max(key_line, max_line(value)));
  if (value.IsMap() && depth <= 64) {
    for (const auto& kv : value) {
      attr.nested.push_back(to_attribute(text, kv.first.Scalar(), kv.second,
                                         mark_line(kv.first), depth + 1));
    }
  } else {
    attr.value = yaml_to_value(value);
  }
  return attr;
}

Variable to_variable(const SourceText& text, const std::string& key,
                     const YAML::Node& value, int key_line, int depth = 0) {
  Variable var;
  var.name = key;
  var.span = text.span(key_line, std::max(key_line, max_line(value)));
  if (value.IsMap() && depth <= 64) {
    for (const auto& kv : value) {
      var.nested.push_back(to_variable(text, kv.first.Scalar(), kv.second,
                                       mark_line(kv.first), depth + 1));
    }
  } else {
    var.value = yaml_to_value(value);
  }
  return var;
}

bool is_block_task(const YAML::Node& task) {
  return task.IsMap() &&
         (task["block"] || task["rescue"] || task["always"]);
}

AtomicUnit task_to_unit(const SourceText& text, const YAML::Node& task,
                        std::vector<std::string>& warnings);

void append_task(const SourceText& text, UnitBlock& parent,
                 const YAML::Node& task, std::vector<std::string>& warnings);

UnitBlock block_task_to_block(const SourceText& text, const YAML::Node& task,
                              std::vector<std::string>& warnings) {
  UnitBlock block;
  block.kind = UnitBlockKind::block;
  if (task["name"] && task["name"].IsScalar()) {
    block.name = task["name"].Scalar();
  }
  int start = mark_line(task);
  block.span = text.span(start, std::max(start, max_line(task)));
  for (const auto& kv : task) {
    std::string key = kv.first.Scalar();
    if (key == "name") continue;
    if ((key == "block" || key == "rescue" || key == "always") &&
        kv.second.IsSequence()) {
      for (const auto& sub : kv.second) append_task(text, block, sub, warnings);
      continue;
    }
    if (key == "vars" && kv.second.IsMap()) {
      for (const auto& var_kv : kv.second) {
        block.variables.push_back(to_variable(text, var_kv.first.Scalar(),
                                              var_kv.second,
                                              mark_line(var_kv.first)));
      }
      continue;
    }
    block.attributes.push_back(
        to_attribute(text, key, kv.second, mark_line(kv.first)));
  }
  return block;
}

AtomicUnit task_to_unit(const SourceText& text, const YAML::Node& task,
                        std::vector<std::string>& warnings) {
  AtomicUnit unit;
  int start = mark_line(task);
  unit.span = text.span(start, std::max(start, max_line(task)));
  if (task["name"] && task["name"].IsScalar()) {
    unit.name = task["name"].Scalar();
  }
  std::string module_key;
  for (const auto& kv : task) {
    std::string key = kv.first.Scalar();
    if (!is_task_keyword(key)) {
      module_key = key;
      break;
    }
  }
  unit.type = module_key;
  const auto add_attribute = [&unit, &warnings, &text](Attribute attr) {
    for (const Attribute& existing : unit.attributes) {
      if (existing.name == attr.name) {
        warnings.push_back(text.path() + ":" +
                           std::to_string(attr.span.start_line) +
                           ": duplicate attribute '" + attr.name +
                           "' ignored");
        return false;
      }
    }
    unit.attributes.push_back(std::move(attr));
    return true;
  };
  for (const auto& kv : task) {
    std::string key = kv.first.Scalar();
    if (key == "name") continue;
    int key_line = mark_line(kv.first);
    if (key == module_key) {
      const YAML::Node& params = kv.second;
      if (params.IsMap()) {
        for (const auto& pkv : params) {
          add_attribute(to_attribute(text, pkv.first.Scalar(), pkv.second,
                                     mark_line(pkv.first)));
        }
      } else if (params.IsScalar()) {
        Attribute attr;
        attr.name = "args";
        attr.value = scalar_to_value(params);
        attr.span = text.span(key_line, std::max(key_line, max_line(params)));
        add_attribute(std::move(attr));
      }
      continue;
    }
    add_attribute(to_attribute(text, key, kv.second, key_line));
  }
  return unit;
}

void append_task(const SourceText& text, UnitBlock& parent,
                 const YAML::Node& task, std::vector<std::string>& warnings) {
  if (!task.IsMap()) return;
  if (is_block_task(task)) {
    parent.nested_blocks.push_back(block_task_to_block(text, task, warnings));
  } else {
    parent.atomic_units.push_back(task_to_unit(text, task, warnings));
  }
}

UnitBlock play_to_block(const SourceText& text, const YAML::Node& play,
                        std::size_t index,
                        std::vector<std::string>& warnings) {
  UnitBlock block;
  block.kind = UnitBlockKind::block;
  if (play["name"] && play["name"].IsScalar()) {
    block.name = play["name"].Scalar();
  } else {
    block.name = "play-" + std::to_string(index);
  }
  int start = mark_line(play);
  block.span = text.span(start, std::max(start, max_line(play)));
  for (const auto& kv : play) {
    std::string key = kv.first.Scalar();
    if (key == "name") continue;
    if (is_task_list_key(key) && kv.second.IsSequence()) {
      for (const auto& task : kv.second) append_task(text, block, task, warnings);
      continue;
    }
    if (key == "vars" && kv.second.IsMap()) {
      for (const auto& var_kv : kv.second) {
        block.variables.push_back(to_variable(text, var_kv.first.Scalar(),
                                              var_kv.second,
                                              mark_line(var_kv.first)));
      }
      continue;
    }
    block.attributes.push_back(
        to_attribute(text, key, kv.second, mark_line(kv.first)));
  }
  return block;
}

/// Full-line and trailing comments; a '#' opens a comment only at line
/// start or after whitespace, outside quotes.
void scan_comments(const SourceText& text, std::vector<Comment>& out) {
  for (int line_no = 1; line_no <= text.line_count(); ++line_no) {
    std::string_view line = text.line(line_no);
    char quote = '\0';
    for (std::size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (quote != '\0') {
        if (c == quote) quote = '\0';
        continue;
      }
      if (c == '\'' || c == '"') {
        quote = c;
        continue;
      }
      if (c == '#' &&
          (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
        std::string body = normalize_whitespace(line.substr(i + 1));
        if (!body.empty()) {
          out.push_back({std::move(body), text.span(line_no, line_no)});
        }
        break;
      }
    }
  }
}

void place_comments(UnitBlock& file, std::vector<Comment> comments) {
  for (Comment& comment : comments) {
    UnitBlock* target = &file;
    bool descended = true;
    while (descended) {
      descended = false;
      for (UnitBlock& nested : target->nested_blocks) {
        if (comment.span.start_line >= nested.span.start_line &&
            comment.span.start_line <= nested.span.end_line) {
          target = &nested;
          descended = true;
          break;
        }
      }
    }
    target->comments.push_back(std::move(comment));
  }
}

}  // namespace

TechParseResult parse_ansible(std::string_view source, std::string_view path) {
  SourceText text(std::string(path), source);
  TechParseResult result;
  UnitBlock& file = result.block;
  file.kind = UnitBlockKind::script;
  file.name = text.path();
  file.span = text.whole_file_span();

  std::vector<YAML::Node> documents;
  try {
    documents = YAML::LoadAll(text.text());
  } catch (const YAML::Exception& e) {
    throw ParseError(std::string(path) + ":" + std::to_string(e.mark.line + 1) +
                     ": " + e.msg);
  }

  for (const YAML::Node& doc : documents) {
    if (!doc || doc.IsNull()) continue;
    if (doc.IsSequence()) {
      bool is_playbook = false;
      for (const auto& item : doc) {
        if (item.IsMap() && item["hosts"]) {
          is_playbook = true;
          break;
        }
      }
      std::size_t play_index = 0;
      for (const auto& item : doc) {
        if (!item.IsMap()) continue;
        if (is_playbook) {
          file.nested_blocks.push_back(
              play_to_block(text, item, play_index, result.warnings));
          ++play_index;
        } else {
          append_task(text, file, item, result.warnings);
        }
      }
    } else if (doc.IsMap()) {
      // A vars file: every top-level entry is a variable.
      for (const auto& kv : doc) {
        file.variables.push_back(to_variable(text, kv.first.Scalar(),
                                             kv.second, mark_line(kv.first)));
      }
    }
  }

  std::vector<Comment> comments;
  scan_comments(text, comments);
  place_comments(file, std::move(comments));
  return result;
}

}  // namespace iaclint
