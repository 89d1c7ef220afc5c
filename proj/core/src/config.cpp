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

#include "iaclint/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "iaclint/errors.hpp"

namespace iaclint {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string current;
  std::istringstream in(value);
  while (std::getline(in, current, ',')) {
    std::string item = trim(current);
    if (!item.empty()) items.push_back(std::move(item));
  }
  return items;
}

int parse_positive_int(const std::string& key, const std::string& value) {
  std::string v = trim(value);
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](unsigned char c) {
        return std::isdigit(c);
      })) {
    throw ConfigError("malformed number for key '" + key + "': " + value);
  }
  int parsed = 0;
  try {
    parsed = std::stoi(v);
  } catch (const std::exception&) {
    throw ConfigError("malformed number for key '" + key + "': " + value);
  }
  if (parsed <= 0) {
    throw ConfigError("value for key '" + key + "' must be positive");
  }
  return parsed;
}

double parse_ratio(const std::string& key, const std::string& value) {
  std::string v = trim(value);
  double parsed = 0;
  std::size_t consumed = 0;
  try {
    parsed = std::stod(v, &consumed);
  } catch (const std::exception&) {
    throw ConfigError("malformed number for key '" + key + "': " + value);
  }
  if (consumed != v.size()) {
    throw ConfigError("malformed number for key '" + key + "': " + value);
  }
  if (!(parsed > 0.0) || parsed > 1.0) {
    throw ConfigError("value for key '" + key + "' must be in (0, 1]");
  }
  return parsed;
}

bool parse_bool(const std::string& key, const std::string& value) {
  std::string v = trim(value);
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError("value for key '" + key + "' must be true or false");
}

std::vector<std::string> parse_nonempty_list(const std::string& key,
                                             const std::string& value) {
  std::vector<std::string> items = split_list(value);
  if (items.empty()) {
    throw ConfigError("list for key '" + key + "' must not be empty");
  }
  return items;
}

using Setter =
    std::function<void(AnalysisConfig&, const std::string& key,
                       const std::string& value)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> kSetters = {
      {"long_statement_max",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.long_statement_max = parse_positive_int(k, v);
       }},
      {"long_statement_inclusive",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.long_statement_inclusive = parse_bool(k, v);
       }},
      {"long_resource_max_lines",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.long_resource_max_lines = parse_positive_int(k, v);
       }},
      {"too_many_vars_ratio",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.too_many_vars_ratio = parse_ratio(k, v);
       }},
      {"duplicate_min_attrs",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.duplicate_min_attrs = parse_positive_int(k, v);
       }},
      {"alignment_gap",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.alignment_gap = parse_positive_int(k, v);
       }},
      {"misplaced_order",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.misplaced_order = parse_nonempty_list(k, v);
       }},
      {"unguarded_variable_techs",
       [](AnalysisConfig& c, const std::string&, const std::string& v) {
         c.unguarded_variable_techs = split_list(v);  // may be empty
       }},
      {"suspicious_comment_words",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.suspicious_comment_words = parse_nonempty_list(k, v);
       }},
      {"secret_key_patterns",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.secret_key_patterns = parse_nonempty_list(k, v);
       }},
      {"weak_crypto_terms",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.weak_crypto_terms = parse_nonempty_list(k, v);
       }},
      {"insecure_url_scheme",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         std::string scheme = trim(v);
         if (scheme.empty()) {
           throw ConfigError("value for key '" + k + "' must not be empty");
         }
         c.insecure_url_scheme = scheme;
       }},
      {"invalid_bind_addresses",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.invalid_bind_addresses = parse_nonempty_list(k, v);
       }},
      {"download_commands",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.download_commands = parse_nonempty_list(k, v);
       }},
      {"checksum_markers",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.checksum_markers = parse_nonempty_list(k, v);
       }},
      {"default_admin_names",
       [](AnalysisConfig& c, const std::string& k, const std::string& v) {
         c.default_admin_names = parse_nonempty_list(k, v);
       }},
  };
  return kSetters;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> kKeys = [] {
    std::vector<std::string> keys;
    for (const auto& [key, setter] : setters()) keys.push_back(key);
    return keys;
  }();
  return kKeys;
}

AnalysisConfig load_config(const std::optional<std::filesystem::path>& path) {
  AnalysisConfig config;
  if (!path) return config;

  std::ifstream in(*path);
  if (!in) {
    throw ConfigError("cannot read config file: " + path->string());
  }
  std::string line;
  bool in_smells_section = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    if (stripped.front() == '[' && stripped.back() == ']') {
      std::string section = trim(stripped.substr(1, stripped.size() - 2));
      if (section != "smells") {
        throw ConfigError("unknown section '" + section + "' in " +
                          path->string());
      }
      in_smells_section = true;
      continue;
    }
    if (!in_smells_section) {
      throw ConfigError("key outside the [smells] section at " +
                        path->string() + ":" + std::to_string(line_no));
    }
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("malformed line at " + path->string() + ":" +
                        std::to_string(line_no));
    }
    std::string key = trim(stripped.substr(0, eq));
    std::string value = stripped.substr(eq + 1);
    // Inline comments after the value.
    std::size_t hash = value.find('#');
    if (hash != std::string::npos) value = value.substr(0, hash);
    value = trim(value);
    auto it = setters().find(key);
    if (it == setters().end()) {
      throw ConfigError("unknown config key '" + key + "'");
    }
    it->second(config, key, value);
  }
  return config;
}

}  // namespace iaclint
