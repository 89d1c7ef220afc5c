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

#include "iaclint/design_smells.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "iaclint/shell_split.hpp"
#include "iaclint/source_text.hpp"
#include "iaclint/traverse.hpp"

namespace iaclint {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  if (text.empty()) return lines;
  std::size_t start = 0;
  while (true) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

SourceSpan line_span(const SourceSpan& parent, int line_no,
                     std::string_view line) {
  SourceSpan span;
  span.path = parent.path;
  span.start_line = line_no;
  span.end_line = line_no;
  span.raw_code = std::string(line);
  return span;
}

SourceSpan point_span(const SourceSpan& parent, int line_no) {
  SourceSpan span;
  span.path = parent.path;
  span.start_line = line_no;
  span.end_line = line_no;
  return span;
}

int leading_spaces(std::string_view line, bool& has_tab) {
  int count = 0;
  has_tab = false;
  for (char c : line) {
    if (c == ' ') {
      ++count;
    } else if (c == '\t') {
      has_tab = true;
      ++count;
    } else {
      break;
    }
  }
  return count;
}

bool is_command_attribute(const Attribute& attr) {
  return attr.name == "command" || attr.name == "onlyif" ||
         attr.name == "unless" || attr.name == "not_if";
}

const char* const kDockerInstructions[] = {
    "FROM",       "RUN",     "CMD",         "LABEL", "MAINTAINER",
    "EXPOSE",     "ENV",     "ADD",         "COPY",  "ENTRYPOINT",
    "VOLUME",     "USER",    "WORKDIR",     "ARG",   "ONBUILD",
    "STOPSIGNAL", "HEALTHCHECK", "SHELL"};

bool is_docker_instruction(std::string_view type) {
  for (const char* instr : kDockerInstructions) {
    if (type == instr) return true;
  }
  return false;
}

}  // namespace

std::vector<Smell> LongStatementDetector::check_unit_block(
    const UnitBlock& block, const AnalysisConfig& config,
    const VisitContext& ctx) const {
  std::vector<Smell> smells;
  if (!ctx.file_root || block.span.raw_code.empty()) return smells;
  const int max = config.long_statement_max;
  const bool inclusive = config.long_statement_inclusive;
  int line_no = block.span.start_line;
  for (std::string_view line : split_lines(block.span.raw_code)) {
    int length = static_cast<int>(utf8_length(line));
    if (length > max || (inclusive && length == max)) {
      smells.push_back(make_smell(
          "design_long_statement", line_span(block.span, line_no, line),
          "line has " + std::to_string(length) + " characters (limit " +
              std::to_string(max) + (inclusive ? " inclusive)" : ")")));
    }
    ++line_no;
  }
  return smells;
}

std::vector<Smell> AvoidCommentsDetector::check_comment(
    const Comment& comment, const AnalysisConfig&, const VisitContext&) const {
  return {make_smell("design_avoid_comments", comment.span,
                     "comment found; prefer self-documenting code")};
}

class ImproperAlignmentDetector::Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::vector<Smell> check(const AtomicUnit& unit,
                                   const AnalysisConfig& config) const = 0;
};

class ImproperAlignmentDetector::PuppetStrategy final
    : public ImproperAlignmentDetector::Strategy {
 public:
  std::vector<Smell> check(const AtomicUnit& unit,
                           const AnalysisConfig& config) const override {
    if (unit.attributes.size() < 1) return {};
    std::size_t longest_name = 0;
    for (const Attribute& attr : unit.attributes) {
      longest_name = std::max(longest_name, attr.name.size());
    }
    int expected_indent = -1;
    for (const Attribute& attr : unit.attributes) {
      std::string_view first_line = attribute_first_line(attr);
      if (first_line.empty()) continue;
      bool has_tab = false;
      int indent = leading_spaces(first_line, has_tab);
      if (has_tab) {
        return {make_smell("design_improper_alignment",
                           point_span(unit.span, attr.span.start_line),
                           "tab character in attribute indentation")};
      }
      if (expected_indent < 0) expected_indent = indent;
      if (indent != expected_indent) {
        return {make_smell("design_improper_alignment",
                           point_span(unit.span, attr.span.start_line),
                           "attribute indentation differs within resource")};
      }
      // Hash values are raw strings; their alignment is not checked.
      if (attr.value.is_string() && !attr.value.as_string().empty() &&
          attr.value.as_string().front() == '{') {
        continue;
      }
      std::size_t arrow = first_line.find("=>", indent + attr.name.size());
      if (arrow == std::string_view::npos) continue;
      std::size_t expected_arrow = static_cast<std::size_t>(expected_indent) +
                                   longest_name +
                                   static_cast<std::size_t>(config.alignment_gap);
      if (arrow != expected_arrow) {
        return {make_smell(
            "design_improper_alignment",
            point_span(unit.span, attr.span.start_line),
            "hash rocket not aligned one gap past the longest attribute "
            "name")};
      }
    }
    return {};
  }

 private:
  static std::string_view attribute_first_line(const Attribute& attr) {
    std::string_view raw = attr.span.raw_code;
    std::size_t nl = raw.find('\n');
    return nl == std::string_view::npos ? raw : raw.substr(0, nl);
  }
};

class ImproperAlignmentDetector::GenericStrategy final
    : public ImproperAlignmentDetector::Strategy {
 public:
  std::vector<Smell> check(const AtomicUnit& unit,
                           const AnalysisConfig&) const override {
    int expected_indent = -1;
    for (const Attribute& attr : unit.attributes) {
      std::string_view raw = attr.span.raw_code;
      std::size_t nl = raw.find('\n');
      std::string_view first_line =
          nl == std::string_view::npos ? raw : raw.substr(0, nl);
      if (first_line.empty()) continue;
      // Attributes sharing the unit's own line carry no indentation signal.
      if (attr.span.start_line == unit.span.start_line) continue;
      bool has_tab = false;
      int indent = leading_spaces(first_line, has_tab);
      if (has_tab) {
        return {make_smell("design_improper_alignment",
                           point_span(unit.span, attr.span.start_line),
                           "tab character in attribute indentation")};
      }
      if (expected_indent < 0) expected_indent = indent;
      if (indent != expected_indent) {
        return {make_smell("design_improper_alignment",
                           point_span(unit.span, attr.span.start_line),
                           "attribute indentation differs within unit")};
      }
    }
    return {};
  }
};

ImproperAlignmentDetector::ImproperAlignmentDetector(Tech tech) {
  if (tech == Tech::puppet) {
    strategy_ = std::make_unique<PuppetStrategy>();
  } else {
    strategy_ = std::make_unique<GenericStrategy>();
  }
}

ImproperAlignmentDetector::~ImproperAlignmentDetector() = default;

std::vector<Smell> ImproperAlignmentDetector::check_atomic_unit(
    const AtomicUnit& unit, const AnalysisConfig& config,
    const VisitContext&) const {
  return strategy_->check(unit, config);
}

std::vector<Smell> LongResourceDetector::check_atomic_unit(
    const AtomicUnit& unit, const AnalysisConfig& config,
    const VisitContext&) const {
  int lines = unit.span.end_line - unit.span.start_line + 1;
  if (lines > config.long_resource_max_lines) {
    return {make_smell(
        "design_long_resource", point_span(unit.span, unit.span.start_line),
        "resource spans " + std::to_string(lines) + " lines (limit " +
            std::to_string(config.long_resource_max_lines) + ")")};
  }
  return {};
}

std::vector<Smell> DuplicateBlockDetector::check_unit_block(
    const UnitBlock& block, const AnalysisConfig& config,
    const VisitContext& ctx) const {
  std::vector<Smell> smells;
  if (!ctx.file_root) return smells;
  // Group every atomic unit in this file tree by its name-blind signature.
  std::map<std::string, std::vector<const AtomicUnit*>> groups;
  for (NodeRef node : traverse(&block)) {
    if (const auto* unit = std::get_if<const AtomicUnit*>(&node)) {
      if (static_cast<int>((*unit)->attributes.size()) <
          config.duplicate_min_attrs) {
        continue;
      }
      groups[atomic_unit_signature(**unit, /*include_name=*/false)].push_back(
          *unit);
    }
  }
  for (const auto& [signature, members] : groups) {
    if (members.size() < 2) continue;
    for (const AtomicUnit* member : members) {
      smells.push_back(make_smell(
          "design_duplicate_block",
          point_span(member->span, member->span.start_line),
          "structurally identical to " +
              std::to_string(members.size() - 1) +
              " other unit(s) in this file"));
    }
  }
  return smells;
}

std::vector<Smell> MisplacedAttributeDetector::check_atomic_unit(
    const AtomicUnit& unit, const AnalysisConfig& config,
    const VisitContext&) const {
  const auto order_index = [&config](const std::string& name) {
    for (std::size_t i = 0; i < config.misplaced_order.size(); ++i) {
      if (config.misplaced_order[i] == name) return static_cast<int>(i);
    }
    return -1;
  };
  int last_order_seen = -1;
  bool unordered_seen = false;
  for (const Attribute& attr : unit.attributes) {
    int index = order_index(attr.name);
    if (index < 0) {
      unordered_seen = true;
      continue;
    }
    if (unordered_seen || index < last_order_seen) {
      return {make_smell("design_misplaced_attribute",
                         point_span(unit.span, attr.span.start_line),
                         "attribute '" + attr.name +
                             "' must precede unordered attributes")};
    }
    last_order_seen = index;
  }
  return {};
}

MultifacetedAbstractionDetector::MultifacetedAbstractionDetector(Tech tech)
    : docker_(tech == Tech::docker) {}

std::vector<Smell> MultifacetedAbstractionDetector::check_atomic_unit(
    const AtomicUnit& unit, const AnalysisConfig&,
    const VisitContext&) const {
  std::vector<Smell> smells;
  if (docker_ && !is_docker_instruction(unit.type)) {
    // Shell-derived unit: the command is the type plus its args attribute.
    for (const Attribute& attr : unit.attributes) {
      if (attr.name != "args" || !attr.value.is_string()) continue;
      std::string command = unit.type + " " + attr.value.as_string();
      if (shell_statement_count(command) > 1) {
        smells.push_back(
            make_smell("design_multifaceted_abstraction",
                       point_span(unit.span, unit.span.start_line),
                       "command performs more than one shell statement"));
      }
    }
    return smells;
  }
  for (const Attribute& attr : unit.attributes) {
    if (!is_command_attribute(attr) || !attr.value.is_string()) continue;
    if (shell_statement_count(attr.value.as_string()) > 1) {
      smells.push_back(make_smell(
          "design_multifaceted_abstraction",
          point_span(unit.span, attr.span.start_line),
          "attribute '" + attr.name +
              "' holds more than one shell statement"));
    }
  }
  return smells;
}

std::vector<Smell> TooManyVariablesDetector::check_unit_block(
    const UnitBlock& block, const AnalysisConfig& config,
    const VisitContext& ctx) const {
  if (!ctx.file_root) return {};
  int declared = 0;
  for (NodeRef node : traverse(&block)) {
    if (std::holds_alternative<const Variable*>(node)) ++declared;
  }
  int non_blank = 0;
  for (std::string_view line : split_lines(block.span.raw_code)) {
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        ++non_blank;
        break;
      }
    }
  }
  if (non_blank == 0) return {};
  double ratio = static_cast<double>(declared) / non_blank;
  if (ratio > config.too_many_vars_ratio) {
    return {make_smell(
        "design_too_many_variables",
        point_span(block.span, block.span.start_line),
        std::to_string(declared) + " variables over " +
            std::to_string(non_blank) + " non-blank lines")};
  }
  return {};
}

namespace {

bool unguarded_enabled(const AnalysisConfig& config, Tech tech) {
  for (const std::string& name : config.unguarded_variable_techs) {
    if (name == tech_name(tech)) return true;
  }
  return false;
}

std::vector<Smell> unguarded_smells(const std::string& name,
                                    const Value& value,
                                    const SourceSpan& span) {
  std::vector<Smell> smells;
  if (!value.is_string()) return smells;
  const std::string& text = value.as_string();
  for (const InterpolationMarker& marker : value.markers()) {
    if (marker.braced) continue;
    int line = span.start_line;
    for (int i = 0; i < marker.begin && i < static_cast<int>(text.size());
         ++i) {
      if (text[static_cast<std::size_t>(i)] == '\n') ++line;
    }
    std::string reference =
        text.substr(static_cast<std::size_t>(marker.begin),
                    static_cast<std::size_t>(marker.end - marker.begin));
    SourceSpan where;
    where.path = span.path;
    where.start_line = line;
    where.end_line = line;
    smells.push_back(make_smell("design_unguarded_variable", where,
                                "reference '" + reference + "' in '" + name +
                                    "' should be brace-delimited"));
  }
  return smells;
}

}  // namespace

std::vector<Smell> UnguardedVariableDetector::check_attribute(
    const Attribute& attr, const AnalysisConfig& config,
    const VisitContext& ctx) const {
  if (!unguarded_enabled(config, ctx.tech)) return {};
  return unguarded_smells(attr.name, attr.value, attr.span);
}

std::vector<Smell> UnguardedVariableDetector::check_variable(
    const Variable& var, const AnalysisConfig& config,
    const VisitContext& ctx) const {
  if (!unguarded_enabled(config, ctx.tech)) return {};
  return unguarded_smells(var.name, var.value, var.span);
}

DetectorSet make_design_detectors(Tech tech) {
  DetectorSet detectors;
  detectors.push_back(std::make_unique<LongStatementDetector>());
  detectors.push_back(std::make_unique<AvoidCommentsDetector>());
  detectors.push_back(std::make_unique<ImproperAlignmentDetector>(tech));
  detectors.push_back(std::make_unique<LongResourceDetector>());
  detectors.push_back(std::make_unique<DuplicateBlockDetector>());
  detectors.push_back(std::make_unique<MisplacedAttributeDetector>());
  detectors.push_back(std::make_unique<MultifacetedAbstractionDetector>(tech));
  detectors.push_back(std::make_unique<TooManyVariablesDetector>());
  detectors.push_back(std::make_unique<UnguardedVariableDetector>());
  return detectors;
}

}  // namespace iaclint
