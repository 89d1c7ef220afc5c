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

#include <string>

#include "iaclint/smell.hpp"

namespace iaclint {

enum class TableFormat { prettytable, latex };

/// Header `path,line,smell_code,smell_label`, one row per finding, LF line
/// endings; fields holding commas, quotes or newlines are quoted.
std::string emit_csv(const SmellReport& report);

/// Per-code statistics: one row per smell code of the family (zero counts
/// included) with the finding count and the number of affected files. The
/// latex format is a standalone tabular environment with underscores
/// escaped.
std::string emit_table(const SmellReport& report, TableFormat format,
                       SmellFamily family);

}  // namespace iaclint
