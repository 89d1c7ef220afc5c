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

#include <iosfwd>
#include <optional>
#include <string>

#include "iaclint/report.hpp"
#include "iaclint/smell.hpp"
#include "iaclint/tech.hpp"

namespace iaclint {

struct CliOptions {
  std::string input_path;
  Tech tech = Tech::puppet;
  SmellFamily smells = SmellFamily::design;
  std::optional<std::string> config_path;
  TableFormat table_format = TableFormat::prettytable;
  bool csv = false;
  bool module_mode = false;  // treat the input directory as one module
  bool print_ir = false;
};

/// Exit codes: 0 clean analysis (findings are not failures), 1 usage,
/// configuration or I/O error, 2 when any file failed to parse. Findings
/// go to `out`, diagnostics to `err`.
int run_cli(const CliOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace iaclint
