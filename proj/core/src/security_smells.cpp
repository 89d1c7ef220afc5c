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

#include "iaclint/security_smells.hpp"

#include <cctype>
#include <string>

#include "iaclint/shell_split.hpp"

namespace iaclint {

namespace {

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    out.push_back(
        static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

/// Tokens split on non-alphanumeric characters, lowercased.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      current.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

bool has_token(std::string_view text, const std::vector<std::string>& words) {
  for (const std::string& token : tokenize(text)) {
    for (const std::string& word : words) {
      if (token == to_lower(word)) return true;
    }
  }
  return false;
}

/// A name matches when one of its tokens starts with the pattern
/// ("password" matches "pass", "ssh_key" matches "key").
bool name_matches(std::string_view name,
                  const std::vector<std::string>& patterns) {
  for (const std::string& token : tokenize(name)) {
    for (const std::string& pattern : patterns) {
      if (token.rfind(to_lower(pattern), 0) == 0) return true;
    }
  }
  return false;
}

bool token_starts_with_any(std::string_view text,
                           const std::vector<std::string>& markers) {
  for (const std::string& token : tokenize(text)) {
    for (const std::string& marker : markers) {
      if (token.rfind(to_lower(marker), 0) == 0) return true;
    }
  }
  return false;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool contains_insecure_url(std::string_view value, const std::string& scheme) {
  std::string haystack = to_lower(value);
  std::string needle = to_lower(scheme) + "://";
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    bool boundary =
        pos == 0 ||
        !std::isalnum(static_cast<unsigned char>(haystack[pos - 1]));
    if (boundary) return true;
    pos += needle.size();
  }
  return false;
}

// Names suggesting the value designates an account or role.
const std::vector<std::string>& account_name_patterns() {
  static const std::vector<std::string> kPatterns = {"user", "role", "login"};
  return kPatterns;
}

SourceSpan point_span(const SourceSpan& span) {
  SourceSpan out;
  out.path = span.path;
  out.start_line = span.start_line;
  out.end_line = span.start_line;
  return out;
}

std::vector<Smell> value_smells(const std::string& name, const Value& value,
                                const SourceSpan& span,
                                const AnalysisConfig& cfg) {
  std::vector<Smell> smells;
  if (!value.is_scalar()) return smells;
  const bool is_string = value.is_string();
  const std::string text = is_string ? value.as_string() : value.display();
  const bool has_markers = is_string && !value.markers().empty();

  if (name_matches(name, cfg.secret_key_patterns)) {
    if (is_string && text.empty()) {
      smells.push_back(make_smell("security_empty_password", point_span(span),
                                  "'" + name + "' is set to an empty string"));
    } else if (!text.empty() && !has_markers && !value.is_boolean()) {
      smells.push_back(make_smell(
          "security_hardcoded_secret", point_span(span),
          "'" + name + "' carries a hard-coded literal"));
    }
  }
  if (name_matches(name, account_name_patterns()) && is_string) {
    std::string lowered = to_lower(trim(text));
    for (const std::string& admin : cfg.default_admin_names) {
      if (lowered == to_lower(admin)) {
        smells.push_back(make_smell(
            "security_admin_by_default", point_span(span),
            "'" + name + "' defaults to privileged account '" + text + "'"));
        break;
      }
    }
  }
  if (is_string) {
    std::string trimmed = trim(text);
    for (const std::string& address : cfg.invalid_bind_addresses) {
      if (trimmed == address) {
        smells.push_back(make_smell("security_invalid_ip_binding",
                                    point_span(span),
                                    "binds to '" + trimmed + "'"));
        break;
      }
    }
    if (contains_insecure_url(text, cfg.insecure_url_scheme)) {
      smells.push_back(make_smell(
          "security_http_without_tls", point_span(span),
          "URL uses the insecure " + cfg.insecure_url_scheme + " scheme"));
    }
  }
  if (has_token(name, cfg.weak_crypto_terms) ||
      (is_string && has_token(text, cfg.weak_crypto_terms))) {
    smells.push_back(make_smell("security_weak_crypto", point_span(span),
                                "mentions a weak cryptography algorithm"));
  }
  return smells;
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

/// True when the string looks like a selector expression:
/// `<expr> ? { <match> => <value>, ... }`.
bool looks_like_selector(std::string_view text) {
  std::size_t q = text.find('?');
  if (q == std::string_view::npos) return false;
  std::size_t brace = text.find('{', q);
  if (brace == std::string_view::npos) return false;
  for (std::size_t i = q + 1; i < brace; ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) return false;
  }
  return text.find("=>", brace) != std::string_view::npos;
}

std::vector<Smell> selector_smells(const Value& value,
                                   const SourceSpan& span) {
  std::vector<Smell> smells;
  if (!value.is_string()) return smells;
  const std::string& text = value.as_string();
  if (!looks_like_selector(text)) return smells;
  if (!has_token(text, {"default"})) {
    smells.push_back(make_smell("security_missing_default", point_span(span),
                                "selector has no default entry"));
  }
  return smells;
}

}  // namespace

std::vector<Smell> CommentSecurityDetector::check_comment(
    const Comment& comment, const AnalysisConfig& config,
    const VisitContext&) const {
  if (has_token(comment.text, config.suspicious_comment_words)) {
    return {make_smell("security_suspicious_comment", comment.span,
                       "comment contains a suspicious keyword")};
  }
  return {};
}

std::vector<Smell> ValueSecurityDetector::check_attribute(
    const Attribute& attr, const AnalysisConfig& config,
    const VisitContext&) const {
  return value_smells(attr.name, attr.value, attr.span, config);
}

std::vector<Smell> ValueSecurityDetector::check_variable(
    const Variable& var, const AnalysisConfig& config,
    const VisitContext&) const {
  return value_smells(var.name, var.value, var.span, config);
}

std::vector<Smell> StructureSecurityDetector::check_unit_block(
    const UnitBlock& block, const AnalysisConfig&, const VisitContext&) const {
  if (block.is_case_block && !block.has_default_branch) {
    SourceSpan where;
    where.path = block.span.path;
    where.start_line = block.span.start_line;
    where.end_line = block.span.start_line;
    return {make_smell("security_missing_default", where,
                       "case block has no default branch")};
  }
  return {};
}

std::vector<Smell> StructureSecurityDetector::check_atomic_unit(
    const AtomicUnit& unit, const AnalysisConfig& config,
    const VisitContext& ctx) const {
  // Collect the command strings this unit executes.
  struct CommandText {
    std::string text;
    int line;
  };
  std::vector<CommandText> commands;
  if (ctx.tech == Tech::docker && !is_docker_instruction(unit.type)) {
    for (const Attribute& attr : unit.attributes) {
      if (attr.name == "args" && attr.value.is_string()) {
        commands.push_back({unit.type + " " + attr.value.as_string(),
                            unit.span.start_line});
      }
    }
  } else {
    // Shell-running module types whose free-form arguments are a command.
    const bool shell_unit = unit.type == "command" || unit.type == "shell" ||
                            unit.type == "script" || unit.type == "raw";
    for (const Attribute& attr : unit.attributes) {
      if (!attr.value.is_string()) continue;
      if (is_command_attribute(attr) || (shell_unit && attr.name == "args")) {
        commands.push_back({attr.value.as_string(), attr.span.start_line});
      }
    }
  }
  for (const CommandText& command : commands) {
    bool downloads = false;
    for (const std::string& statement :
         split_shell_statements(command.text, /*split_on_pipe=*/true)) {
      std::string word = to_lower(shell_first_word(statement));
      for (const std::string& known : config.download_commands) {
        if (word == to_lower(known)) {
          downloads = true;
          break;
        }
      }
      if (downloads) break;
    }
    if (!downloads) continue;
    bool has_marker = token_starts_with_any(command.text,
                                            config.checksum_markers);
    for (const Attribute& attr : unit.attributes) {
      if (has_marker) break;
      if (token_starts_with_any(attr.name, config.checksum_markers) ||
          token_starts_with_any(attr.value.display(),
                                config.checksum_markers)) {
        has_marker = true;
      }
    }
    if (!has_marker) {
      SourceSpan where;
      where.path = unit.span.path;
      where.start_line = command.line;
      where.end_line = command.line;
      return {make_smell("security_no_integrity_check", where,
                         "download without a checksum or signature check")};
    }
  }
  return {};
}

std::vector<Smell> StructureSecurityDetector::check_attribute(
    const Attribute& attr, const AnalysisConfig&, const VisitContext&) const {
  return selector_smells(attr.value, attr.span);
}

std::vector<Smell> StructureSecurityDetector::check_variable(
    const Variable& var, const AnalysisConfig&, const VisitContext&) const {
  return selector_smells(var.value, var.span);
}

DetectorSet make_security_detectors(Tech) {
  DetectorSet detectors;
  detectors.push_back(std::make_unique<CommentSecurityDetector>());
  detectors.push_back(std::make_unique<ValueSecurityDetector>());
  detectors.push_back(std::make_unique<StructureSecurityDetector>());
  return detectors;
}

}  // namespace iaclint
