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

#include "iaclint/ir.hpp"

namespace iaclint {

std::string_view unit_block_kind_name(UnitBlockKind kind) {
  switch (kind) {
    case UnitBlockKind::script:
      return "script";
    case UnitBlockKind::block:
      return "block";
    case UnitBlockKind::build_stage:
      return "build-stage";
    case UnitBlockKind::class_like:
      return "class-like";
  }
  return "unknown";
}

std::string_view node_kind_name(NodeRef node) {
  struct Visitor {
    std::string_view operator()(const Project*) const { return "project"; }
    std::string_view operator()(const Module*) const { return "module"; }
    std::string_view operator()(const UnitBlock*) const { return "unit-block"; }
    std::string_view operator()(const AtomicUnit*) const {
      return "atomic-unit";
    }
    std::string_view operator()(const Attribute*) const { return "attribute"; }
    std::string_view operator()(const Variable*) const { return "variable"; }
    std::string_view operator()(const Comment*) const { return "comment"; }
  };
  return std::visit(Visitor{}, node);
}

std::string_view node_name(NodeRef node) {
  struct Visitor {
    std::string_view operator()(const Project* p) const { return p->name; }
    std::string_view operator()(const Module* m) const { return m->name; }
    std::string_view operator()(const UnitBlock* u) const { return u->name; }
    std::string_view operator()(const AtomicUnit* a) const { return a->name; }
    std::string_view operator()(const Attribute* a) const { return a->name; }
    std::string_view operator()(const Variable* v) const { return v->name; }
    std::string_view operator()(const Comment* c) const { return c->text; }
  };
  return std::visit(Visitor{}, node);
}

const SourceSpan* node_span(NodeRef node) {
  struct Visitor {
    const SourceSpan* operator()(const Project*) const { return nullptr; }
    const SourceSpan* operator()(const Module* m) const { return &m->span; }
    const SourceSpan* operator()(const UnitBlock* u) const { return &u->span; }
    const SourceSpan* operator()(const AtomicUnit* a) const { return &a->span; }
    const SourceSpan* operator()(const Attribute* a) const { return &a->span; }
    const SourceSpan* operator()(const Variable* v) const { return &v->span; }
    const SourceSpan* operator()(const Comment* c) const { return &c->span; }
  };
  return std::visit(Visitor{}, node);
}

}  // namespace iaclint
