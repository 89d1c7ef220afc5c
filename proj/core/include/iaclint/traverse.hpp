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
#include <string>
#include <utility>
#include <vector>

#include "iaclint/ir.hpp"

namespace iaclint {

/// Pre-order depth-first traversal. Child order is fixed per node kind:
/// modules, unit_blocks, atomic_units, variables, comments, attributes,
/// nested_blocks, then nested attributes/variables. Every reachable node
/// appears exactly once.
std::vector<NodeRef> traverse(NodeRef root);

/// Maps attribute (and unit type) names between technologies; a partial
/// bijection given as unordered pairs, applied symmetrically.
using AttrNameMap = std::vector<std::pair<std::string, std::string>>;

/// Structural equality of two atomic units: types equal (or paired in
/// `name_map`), attribute multisets equal under mapped names with
/// whitespace-normalized string values, and names equal unless
/// `ignore_name`.
bool atomic_unit_equivalent(const AtomicUnit& a, const AtomicUnit& b,
                            bool ignore_name = false,
                            const AttrNameMap& name_map = {});

/// Canonical text key: two units share a signature exactly when they are
/// atomic_unit_equivalent under the identity map (with names ignored
/// unless `include_name`).
std::string atomic_unit_signature(const AtomicUnit& unit, bool include_name);

/// Human-oriented debug dump: one node per line, indented by depth. Not a
/// stability contract.
void dump_tree(NodeRef root, std::ostream& out);

}  // namespace iaclint
