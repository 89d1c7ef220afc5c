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
// The technology-agnostic intermediate representation. Every frontend lowers
// its scripts into this hierarchy:
//
//   Project -> Module -> UnitBlock -> AtomicUnit -> Attribute
//                        (+ Variable, Comment, nested UnitBlock)
//
// Nodes are immutable after construction and safe to share across
// concurrent detector runs.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "iaclint/source_span.hpp"
#include "iaclint/value.hpp"

namespace iaclint {

struct Comment {
  std::string text;  // content without the comment leader, trimmed, non-empty
  SourceSpan span;
};

struct Attribute {
  std::string name;
  Value value;  // null when `nested` is non-empty
  std::vector<Attribute> nested;
  SourceSpan span;
};

struct Variable {
  std::string name;
  Value value;  // null when `nested` is non-empty
  std::vector<Variable> nested;
  SourceSpan span;
};

/// One declared system change: an Ansible task, a Chef/Puppet/Terraform
/// resource, or a Docker shell command / instruction.
struct AtomicUnit {
  std::string name;
  std::string type;
  std::vector<Attribute> attributes;  // names unique, first occurrence wins
  SourceSpan span;
};

enum class UnitBlockKind { script, block, build_stage, class_like };

std::string_view unit_block_kind_name(UnitBlockKind kind);

/// A script or a grouping of atomic units: playbook/play, recipe, Dockerfile
/// or build stage, manifest/class, Terraform file. Conditional constructs
/// (Puppet if/case) also lower to blocks; case-like blocks carry the
/// default-branch flag used by the missing-default security rule.
struct UnitBlock {
  std::string name;  // may be empty
  UnitBlockKind kind = UnitBlockKind::script;
  std::vector<AtomicUnit> atomic_units;
  std::vector<Variable> variables;
  std::vector<Comment> comments;
  std::vector<Attribute> attributes;
  std::vector<UnitBlock> nested_blocks;
  SourceSpan span;
  bool is_case_block = false;
  bool has_default_branch = false;
};

/// A reusable folder of scripts: Ansible role, Chef cookbook,
/// Puppet/Terraform module. Never contains other modules.
struct Module {
  std::string name;
  std::vector<UnitBlock> unit_blocks;
  SourceSpan span;  // module root folder; raw_code empty
};

struct Project {
  std::string name;
  std::vector<Module> modules;  // names unique within the project
  std::vector<UnitBlock> unit_blocks;
};

/// A borrowed reference to any IR node; the IR owns its nodes by value.
using NodeRef =
    std::variant<const Project*, const Module*, const UnitBlock*,
                 const AtomicUnit*, const Attribute*, const Variable*,
                 const Comment*>;

std::string_view node_kind_name(NodeRef node);
std::string_view node_name(NodeRef node);

/// The node's span; Project has none, so its members report an empty span.
const SourceSpan* node_span(NodeRef node);

}  // namespace iaclint
