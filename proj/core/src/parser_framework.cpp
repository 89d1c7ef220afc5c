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

#include "iaclint/parser_framework.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "iaclint/errors.hpp"
#include "iaclint/parsers.hpp"

namespace fs = std::filesystem;

namespace iaclint {

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failure: " + path.string());
  }
  return buffer.str();
}

bool has_extension(const fs::path& path, std::string_view ext) {
  return path.extension() == ext;
}

/// The nearest enclosing module root between `base` (exclusive) and `file`
/// (exclusive), or empty. Module layouts are technology conventions; the
/// shallowest match wins so modules never nest.
fs::path find_module_root(const fs::path& base, const fs::path& file,
                          Tech tech) {
  fs::path rel = file.lexically_relative(base);
  std::vector<fs::path> parts(rel.begin(), rel.end());
  fs::path current = base;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    fs::path dir = current / parts[i];
    switch (tech) {
      case Tech::ansible:
        if (current.filename() == "roles") return dir;
        break;
      case Tech::chef: {
        std::error_code ec;
        if (fs::exists(dir / "metadata.rb", ec) ||
            fs::is_directory(dir / "recipes", ec)) {
          return dir;
        }
        break;
      }
      case Tech::puppet: {
        std::error_code ec;
        if (fs::is_directory(dir / "manifests", ec)) return dir;
        break;
      }
      case Tech::terraform:
        if (current.filename() == "modules") return dir;
        break;
      case Tech::docker:
        break;
    }
    current = dir;
  }
  return {};
}

UnitBlock empty_block_for(const fs::path& path) {
  UnitBlock block;
  block.kind = UnitBlockKind::script;
  block.name = path.string();
  block.span.path = path.string();
  return block;
}

struct FileParseResult {
  bool ok = false;
  UnitBlock block;
};

FileParseResult parse_one(const fs::path& path, Tech tech,
                          std::vector<std::string>& warnings,
                          std::vector<FailedFile>& failed) {
  std::string content = read_file(path);
  try {
    TechParseResult parsed = parse_source(content, path.string(), tech);
    warnings.insert(warnings.end(), parsed.warnings.begin(),
                    parsed.warnings.end());
    return {true, std::move(parsed.block)};
  } catch (const ParseError& e) {
    failed.push_back({path.string(), e.what()});
    return {false, empty_block_for(path)};
  }
}

}  // namespace

bool file_matches_tech(const fs::path& path, Tech tech) {
  switch (tech) {
    case Tech::ansible:
      return has_extension(path, ".yml") || has_extension(path, ".yaml");
    case Tech::chef:
      return has_extension(path, ".rb");
    case Tech::docker:
      return path.filename() == "Dockerfile" ||
             has_extension(path, ".dockerfile");
    case Tech::puppet:
      return has_extension(path, ".pp");
    case Tech::terraform:
      return has_extension(path, ".tf");
  }
  return false;
}

std::vector<DiscoveredFile> discover(const fs::path& dir, Tech tech) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("not a readable directory: " + dir.string());
  }
  std::vector<DiscoveredFile> files;
  fs::recursive_directory_iterator it(dir, ec), end;
  if (ec) {
    throw IoError("cannot enumerate directory: " + dir.string());
  }
  for (; it != end; it.increment(ec)) {
    if (ec) throw IoError("cannot enumerate directory: " + dir.string());
    if (!it->is_regular_file(ec)) continue;
    const fs::path& path = it->path();
    if (!file_matches_tech(path, tech)) continue;
    DiscoveredFile entry;
    entry.path = path.string();
    fs::path module_root = find_module_root(dir, path, tech);
    if (!module_root.empty()) {
      entry.role = FileRole::module_member;
      entry.module_name = module_root.filename().string();
    }
    files.push_back(std::move(entry));
  }
  std::sort(files.begin(), files.end(),
            [](const DiscoveredFile& a, const DiscoveredFile& b) {
              return a.path < b.path;
            });
  return files;
}

ParseOutcome parse_file(const fs::path& path, Tech tech) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw IoError("not a readable file: " + path.string());
  }
  ParseOutcome outcome;
  FileParseResult parsed =
      parse_one(path, tech, outcome.warnings, outcome.failed_files);
  outcome.files_analyzed = parsed.ok ? 1 : 0;
  outcome.result = std::move(parsed.block);
  return outcome;
}

ParseOutcome parse_folder(const fs::path& path, Tech tech) {
  ParseOutcome outcome;
  Project project;
  project.name = path.filename().string();
  if (project.name.empty()) project.name = path.string();

  std::vector<DiscoveredFile> files = discover(path, tech);
  std::map<std::string, Module> modules;  // ordered by name
  for (const DiscoveredFile& file : files) {
    FileParseResult parsed =
        parse_one(file.path, tech, outcome.warnings, outcome.failed_files);
    if (!parsed.ok) continue;
    ++outcome.files_analyzed;
    if (file.role == FileRole::module_member) {
      Module& module = modules[file.module_name];
      module.name = file.module_name;
      module.unit_blocks.push_back(std::move(parsed.block));
    } else {
      project.unit_blocks.push_back(std::move(parsed.block));
    }
  }
  for (auto& [name, module] : modules) {
    module.span.path = name;
    project.modules.push_back(std::move(module));
  }
  outcome.result = std::move(project);
  return outcome;
}

ParseOutcome parse_module(const fs::path& path, Tech tech) {
  ParseOutcome outcome;
  Module module;
  module.name = path.filename().string();
  if (module.name.empty()) module.name = path.string();
  module.span.path = path.string();

  std::vector<DiscoveredFile> files = discover(path, tech);
  for (const DiscoveredFile& file : files) {
    FileParseResult parsed =
        parse_one(file.path, tech, outcome.warnings, outcome.failed_files);
    if (!parsed.ok) continue;
    ++outcome.files_analyzed;
    module.unit_blocks.push_back(std::move(parsed.block));
  }
  if (files.empty()) {
    outcome.warnings.push_back("no recognized files under " + path.string());
  }
  outcome.result = std::move(module);
  return outcome;
}

TechParseResult parse_source(std::string_view source, std::string_view path,
                             Tech tech) {
  switch (tech) {
    case Tech::ansible:
      return parse_ansible(source, path);
    case Tech::chef:
      return parse_chef(source, path);
    case Tech::docker:
      return parse_docker(source, path);
    case Tech::puppet:
      return parse_puppet(source, path);
    case Tech::terraform:
      return parse_terraform(source, path);
  }
  throw IoError("unknown technology");
}

}  // namespace iaclint
