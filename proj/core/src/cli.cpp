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

#include "iaclint/cli.hpp"

#include <filesystem>
#include <ostream>
#include <variant>

#include <CLI11.hpp>

#include "iaclint/config.hpp"
#include "iaclint/design_smells.hpp"
#include "iaclint/engine.hpp"
#include "iaclint/errors.hpp"
#include "iaclint/parser_framework.hpp"
#include "iaclint/security_smells.hpp"
#include "iaclint/traverse.hpp"

namespace fs = std::filesystem;

namespace iaclint {

namespace {

NodeRef outcome_root(const ParseOutcome& outcome) {
  if (const auto* project = std::get_if<Project>(&outcome.result)) {
    return project;
  }
  if (const auto* module = std::get_if<Module>(&outcome.result)) {
    return module;
  }
  return &std::get<UnitBlock>(outcome.result);
}

}  // namespace

int run_cli(const CliOptions& options, std::ostream& out, std::ostream& err) {
  AnalysisConfig config;
  try {
    std::optional<fs::path> config_path;
    if (options.config_path) config_path = *options.config_path;
    config = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  ParseOutcome outcome;
  try {
    fs::path input(options.input_path);
    std::error_code ec;
    if (fs::is_regular_file(input, ec)) {
      outcome = parse_file(input, options.tech);
    } else if (fs::is_directory(input, ec)) {
      outcome = options.module_mode ? parse_module(input, options.tech)
                                    : parse_folder(input, options.tech);
    } else {
      err << "error: no such file or directory: " << options.input_path
          << "\n";
      return 1;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  for (const std::string& warning : outcome.warnings) {
    err << "warning: " << warning << "\n";
  }
  for (const FailedFile& failed : outcome.failed_files) {
    err << "failed: " << failed.path << ": " << failed.reason << "\n";
  }

  NodeRef root = outcome_root(outcome);
  if (options.print_ir) dump_tree(root, out);

  DetectorSet detectors = options.smells == SmellFamily::design
                              ? make_design_detectors(options.tech)
                              : make_security_detectors(options.tech);
  SmellReport report = run_detectors(root, detectors, config, options.tech);
  report.files_analyzed = outcome.files_analyzed;
  for (const FailedFile& failed : outcome.failed_files) {
    report.failed_files.push_back({failed.path, failed.reason});
  }

  if (options.csv) {
    out << emit_csv(report);
  } else {
    out << emit_table(report, options.table_format, options.smells);
  }
  err << "files analyzed: " << report.files_analyzed
      << ", files failed: " << report.failed_files.size()
      << ", findings: " << report.findings.size() << "\n";

  return outcome.failed_files.empty() ? 0 : 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Polyglot code smell detection for IaC scripts"};
  CliOptions options;

  std::string tech;
  std::string smells = "design";
  std::string table_format = "prettytable";
  std::string config_path;

  app.add_option("path", options.input_path, "File or folder to analyze")
      ->required();
  app.add_option("--tech", tech, "IaC technology of the analyzed scripts")
      ->required()
      ->check(CLI::IsMember({"ansible", "chef", "docker", "puppet",
                             "terraform"}));
  app.add_option("--smells", smells, "Type of smells to analyze")
      ->check(CLI::IsMember({"design", "security"}));
  app.add_option("--config", config_path, "Path of a config file");
  app.add_option("--tableformat", table_format,
                 "Presentation format of the stats tables")
      ->check(CLI::IsMember({"prettytable", "latex"}));
  app.add_flag("--csv", options.csv, "Produce the output in CSV format");
  app.add_flag("--module", options.module_mode,
               "Treat the input folder as one module");
  app.add_flag("--print-ir", options.print_ir,
               "Dump the intermediate representation before the analysis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  options.tech = *tech_from_name(tech);
  options.smells =
      smells == "security" ? SmellFamily::security : SmellFamily::design;
  options.table_format = table_format == "latex" ? TableFormat::latex
                                                 : TableFormat::prettytable;
  if (!config_path.empty()) options.config_path = config_path;
  return run_cli(options, out, err);
}

}  // namespace iaclint
