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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace iaclint {

/// Every tunable the detectors read. User configuration overlays these
/// defaults; unknown keys are rejected by name. The INI file uses one
/// `[smells]` section with keys named exactly as the fields below; list
/// values are comma-separated.
struct AnalysisConfig {
  // Design & implementation thresholds.
  int long_statement_max = 140;
  bool long_statement_inclusive = false;
  int long_resource_max_lines = 12;
  double too_many_vars_ratio = 0.3;
  int duplicate_min_attrs = 2;
  int alignment_gap = 1;
  std::vector<std::string> misplaced_order = {"ensure"};
  std::vector<std::string> unguarded_variable_techs = {"puppet"};

  // Security lexicons; matching is case-insensitive on normalized text.
  std::vector<std::string> suspicious_comment_words = {"todo",  "fixme",
                                                       "hack",  "bug",
                                                       "later", "ticket"};
  std::vector<std::string> secret_key_patterns = {"pass", "pwd",   "secret",
                                                  "key",  "token", "user"};
  std::vector<std::string> weak_crypto_terms = {"md5", "sha1", "arcfour"};
  std::string insecure_url_scheme = "http";
  std::vector<std::string> invalid_bind_addresses = {"0.0.0.0", "::"};
  std::vector<std::string> download_commands = {"wget", "curl"};
  std::vector<std::string> checksum_markers = {"checksum", "gpg", "sha256",
                                               "hash"};
  std::vector<std::string> default_admin_names = {"admin", "root"};

  friend bool operator==(const AnalysisConfig&,
                         const AnalysisConfig&) = default;
};

/// All recognized configuration keys, for documentation and validation.
const std::vector<std::string>& config_keys();

/// Built-in defaults overlaid with the user file when given. Throws
/// ConfigError naming the offending key on unknown keys, malformed or
/// out-of-range numbers, and on unreadable files.
AnalysisConfig load_config(
    const std::optional<std::filesystem::path>& path = std::nullopt);

}  // namespace iaclint
