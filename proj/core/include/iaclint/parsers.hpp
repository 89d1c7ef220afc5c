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
// The five technology frontends. Each one is a pure function from source
// text to a file-level UnitBlock; syntax failures raise ParseError.
// Input is normalized first (newlines to LF, invalid UTF-8 to U+FFFD).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "iaclint/ir.hpp"
#include "iaclint/tech.hpp"

namespace iaclint {

struct TechParseResult {
  UnitBlock block;
  std::vector<std::string> warnings;
};

/// YAML playbooks, task files and vars files. Plays become nested blocks,
/// tasks become atomic units typed by their module key, vars become
/// variables. Comments are recovered by a line scan since the YAML reader
/// drops them.
TechParseResult parse_ansible(std::string_view source, std::string_view path);

/// Restricted recipe grammar: comments, simple assignments, and resource
/// blocks `type 'name' do ... end` whose body lines are `attr literal`.
TechParseResult parse_chef(std::string_view source, std::string_view path);

/// Dockerfiles. Every FROM opens a build-stage block; RUN lines are split
/// into one atomic unit per top-level shell statement (pipes do not split);
/// ENV/ARG become variables; other instructions become atomic units typed
/// by instruction.
TechParseResult parse_docker(std::string_view source, std::string_view path);

/// Puppet manifest subset: classes, defines, resources, assignments,
/// comments, if/unless/case (conditions kept raw), selector and hash values
/// kept as raw strings.
TechParseResult parse_puppet(std::string_view source, std::string_view path);

/// HCL2 subset: blocks, attributes, comments. `resource` blocks become
/// atomic units, `variable`/`locals` become variables, blocks nested in a
/// resource become nested attributes.
TechParseResult parse_terraform(std::string_view source,
                                std::string_view path);

TechParseResult parse_source(std::string_view source, std::string_view path,
                             Tech tech);

}  // namespace iaclint
