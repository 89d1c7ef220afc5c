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

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "iaclint/source_span.hpp"

namespace iaclint {

enum class SmellFamily { design, security };

/// One finding: stable code, human label, location, one-line detail.
struct Smell {
  std::string code;
  std::string label;
  SourceSpan span;
  std::string detail;
};

struct SmellInfo {
  std::string_view code;
  std::string_view label;
  SmellFamily family;
};

/// The closed set of 18 registered smells (9 per family).
const std::array<SmellInfo, 18>& smell_registry();

std::string_view smell_label(std::string_view code);
std::vector<std::string_view> smell_codes(SmellFamily family);

struct FileFailure {
  std::string path;
  std::string reason;
};

/// The outcome of one analysis run: sorted findings plus enough bookkeeping
/// to recompute every statistic.
struct SmellReport {
  std::vector<Smell> findings;  // sorted by (path, line, code)
  int files_analyzed = 0;
  std::vector<FileFailure> failed_files;

  std::map<std::string, int> count_by_code() const;
  /// Number of distinct paths carrying each code.
  std::map<std::string, int> files_by_code() const;
};

}  // namespace iaclint
