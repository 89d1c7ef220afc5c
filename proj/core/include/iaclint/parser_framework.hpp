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
// Filesystem discovery and assembly of parsed files into the IR hierarchy.
// Recognized layouts:
//   ansible    *.yml/*.yaml; roles/<name>/ directories become modules
//   chef       *.rb; directories with metadata.rb or recipes/ become modules
//   docker     files named Dockerfile or *.dockerfile
//   puppet     *.pp; directories with a manifests/ subdirectory become modules
//   terraform  *.tf; modules/<name>/ directories holding .tf files become
//              modules
// Syntax errors degrade to per-file failure records; I/O errors are fatal.

#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "iaclint/ir.hpp"
#include "iaclint/tech.hpp"

namespace iaclint {

enum class FileRole { script, module_member };

struct DiscoveredFile {
  std::string path;             // input path joined with the relative path
  FileRole role = FileRole::script;
  std::string module_name;      // set for module members

  friend bool operator==(const DiscoveredFile&,
                         const DiscoveredFile&) = default;
};

/// Recognized files under `dir`, lexicographically sorted by path.
std::vector<DiscoveredFile> discover(const std::filesystem::path& dir,
                                     Tech tech);

struct FailedFile {
  std::string path;
  std::string reason;
};

struct ParseOutcome {
  std::variant<UnitBlock, Module, Project> result;
  std::vector<std::string> warnings;
  std::vector<FailedFile> failed_files;
  int files_analyzed = 0;
};

/// Parses one file. On syntax error the result is an empty UnitBlock named
/// after the file and `failed_files` holds the path.
ParseOutcome parse_file(const std::filesystem::path& path, Tech tech);

/// Parses a directory tree into a Project: recognized module layouts become
/// Modules, everything else lands on the project. Every discovered file
/// ends up in exactly one of the two; failed files are only recorded in
/// `failed_files`.
ParseOutcome parse_folder(const std::filesystem::path& path, Tech tech);

/// Parses a directory shaped as one module.
ParseOutcome parse_module(const std::filesystem::path& path, Tech tech);

/// True if `ext`/`name` belongs to the technology (used by discover).
bool file_matches_tech(const std::filesystem::path& path, Tech tech);

}  // namespace iaclint
