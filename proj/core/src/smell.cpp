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

#include "iaclint/smell.hpp"

#include <set>

namespace iaclint {

const std::array<SmellInfo, 18>& smell_registry() {
  static const std::array<SmellInfo, 18> kRegistry = {{
      {"design_avoid_comments", "Avoid comments", SmellFamily::design},
      {"design_duplicate_block", "Duplicate block", SmellFamily::design},
      {"design_improper_alignment", "Improper alignment",
       SmellFamily::design},
      {"design_long_resource", "Long resource", SmellFamily::design},
      {"design_long_statement", "Long statement", SmellFamily::design},
      {"design_misplaced_attribute", "Misplaced attribute",
       SmellFamily::design},
      {"design_multifaceted_abstraction", "Multifaceted abstraction",
       SmellFamily::design},
      {"design_too_many_variables", "Too many variables",
       SmellFamily::design},
      {"design_unguarded_variable", "Unguarded variable",
       SmellFamily::design},
      {"security_admin_by_default", "Admin by default",
       SmellFamily::security},
      {"security_empty_password", "Empty password", SmellFamily::security},
      {"security_hardcoded_secret", "Hard-coded secret",
       SmellFamily::security},
      {"security_http_without_tls", "Use of HTTP without TLS",
       SmellFamily::security},
      {"security_invalid_ip_binding", "Invalid IP address binding",
       SmellFamily::security},
      {"security_missing_default", "Missing default case",
       SmellFamily::security},
      {"security_no_integrity_check", "No integrity check",
       SmellFamily::security},
      {"security_suspicious_comment", "Suspicious comment",
       SmellFamily::security},
      {"security_weak_crypto", "Use of weak cryptography algorithms",
       SmellFamily::security},
  }};
  return kRegistry;
}

std::string_view smell_label(std::string_view code) {
  for (const SmellInfo& info : smell_registry()) {
    if (info.code == code) return info.label;
  }
  return {};
}

std::vector<std::string_view> smell_codes(SmellFamily family) {
  std::vector<std::string_view> codes;
  for (const SmellInfo& info : smell_registry()) {
    if (info.family == family) codes.push_back(info.code);
  }
  return codes;
}

std::map<std::string, int> SmellReport::count_by_code() const {
  std::map<std::string, int> counts;
  for (const Smell& smell : findings) ++counts[smell.code];
  return counts;
}

std::map<std::string, int> SmellReport::files_by_code() const {
  std::map<std::string, std::set<std::string>> paths;
  for (const Smell& smell : findings) paths[smell.code].insert(smell.span.path);
  std::map<std::string, int> counts;
  for (const auto& [code, set] : paths) {
    counts[code] = static_cast<int>(set.size());
  }
  return counts;
}

}  // namespace iaclint
