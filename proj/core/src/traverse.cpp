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

#include "iaclint/traverse.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "iaclint/value.hpp"

namespace iaclint {

namespace {

void visit_node(NodeRef node, std::vector<NodeRef>& out);

void visit_attribute(const Attribute& attr, std::vector<NodeRef>& out) {
  out.push_back(&attr);
  for (const Attribute& nested : attr.nested) visit_attribute(nested, out);
}

void visit_variable(const Variable& var, std::vector<NodeRef>& out) {
  out.push_back(&var);
  for (const Variable& nested : var.nested) visit_variable(nested, out);
}

void visit_unit_block(const UnitBlock& block, std::vector<NodeRef>& out) {
  out.push_back(&block);
  for (const AtomicUnit& unit : block.atomic_units) {
    out.push_back(&unit);
    for (const Attribute& attr : unit.attributes) visit_attribute(attr, out);
  }
  for (const Variable& var : block.variables) visit_variable(var, out);
  for (const Comment& comment : block.comments) out.push_back(&comment);
  for (const Attribute& attr : block.attributes) visit_attribute(attr, out);
  for (const UnitBlock& nested : block.nested_blocks) {
    visit_unit_block(nested, out);
  }
}

void visit_node(NodeRef node, std::vector<NodeRef>& out) {
  struct Visitor {
    std::vector<NodeRef>& out;
    void operator()(const Project* p) const {
      out.push_back(p);
      for (const Module& m : p->modules) visit_node(&m, out);
      for (const UnitBlock& u : p->unit_blocks) visit_unit_block(u, out);
    }
    void operator()(const Module* m) const {
      out.push_back(m);
      for (const UnitBlock& u : m->unit_blocks) visit_unit_block(u, out);
    }
    void operator()(const UnitBlock* u) const { visit_unit_block(*u, out); }
    void operator()(const AtomicUnit* a) const {
      out.push_back(a);
      for (const Attribute& attr : a->attributes) visit_attribute(attr, out);
    }
    void operator()(const Attribute* a) const { visit_attribute(*a, out); }
    void operator()(const Variable* v) const { visit_variable(*v, out); }
    void operator()(const Comment* c) const { out.push_back(c); }
  };
  std::visit(Visitor{out}, node);
}

// Canonical serialization of an attribute under a name mapping; nested
// attributes are folded in recursively as a sorted multiset.
std::string attribute_key(const Attribute& attr,
                          const std::map<std::string, std::string>& canon) {
  std::string name = attr.name;
  if (auto it = canon.find(name); it != canon.end()) name = it->second;
  std::string value_key;
  if (attr.value.is_string()) {
    value_key = "s:" + normalize_whitespace(attr.value.as_string());
  } else {
    value_key = "v:" + attr.value.display();
  }
  std::vector<std::string> nested_keys;
  nested_keys.reserve(attr.nested.size());
  for (const Attribute& nested : attr.nested) {
    nested_keys.push_back(attribute_key(nested, canon));
  }
  std::sort(nested_keys.begin(), nested_keys.end());
  std::string out = name + "=" + value_key;
  for (const std::string& k : nested_keys) out += "{" + k + "}";
  return out;
}

}  // namespace

std::vector<NodeRef> traverse(NodeRef root) {
  std::vector<NodeRef> out;
  visit_node(root, out);
  return out;
}

bool atomic_unit_equivalent(const AtomicUnit& a, const AtomicUnit& b,
                            bool ignore_name, const AttrNameMap& name_map) {
  // Map either side of each pair to a single representative.
  std::map<std::string, std::string> canon;
  for (const auto& [left, right] : name_map) {
    canon[left] = left;
    canon[right] = left;
  }
  const auto canon_of = [&canon](const std::string& name) {
    auto it = canon.find(name);
    return it != canon.end() ? it->second : name;
  };

  if (canon_of(a.type) != canon_of(b.type)) return false;
  if (!ignore_name && a.name != b.name) return false;
  if (a.attributes.size() != b.attributes.size()) return false;

  std::vector<std::string> keys_a, keys_b;
  keys_a.reserve(a.attributes.size());
  keys_b.reserve(b.attributes.size());
  for (const Attribute& attr : a.attributes) {
    keys_a.push_back(attribute_key(attr, canon));
  }
  for (const Attribute& attr : b.attributes) {
    keys_b.push_back(attribute_key(attr, canon));
  }
  std::sort(keys_a.begin(), keys_a.end());
  std::sort(keys_b.begin(), keys_b.end());
  return keys_a == keys_b;
}

std::string atomic_unit_signature(const AtomicUnit& unit, bool include_name) {
  static const std::map<std::string, std::string> kIdentity;
  std::vector<std::string> keys;
  keys.reserve(unit.attributes.size());
  for (const Attribute& attr : unit.attributes) {
    keys.push_back(attribute_key(attr, kIdentity));
  }
  std::sort(keys.begin(), keys.end());
  std::string out = unit.type;
  out.push_back('\x1f');
  if (include_name) out += unit.name;
  for (const std::string& key : keys) {
    out.push_back('\x1e');
    out += key;
  }
  return out;
}

void dump_tree(NodeRef root, std::ostream& out) {
  struct Entry {
    NodeRef node;
    int depth;
  };
  // Re-walk with explicit depth; mirrors traverse() order.
  std::vector<Entry> entries;
  struct Walker {
    std::vector<Entry>& entries;
    void walk(NodeRef node, int depth) const {
      entries.push_back({node, depth});
      struct Children {
        const Walker& w;
        int depth;
        void operator()(const Project* p) const {
          for (const Module& m : p->modules) w.walk(&m, depth + 1);
          for (const UnitBlock& u : p->unit_blocks) w.walk(&u, depth + 1);
        }
        void operator()(const Module* m) const {
          for (const UnitBlock& u : m->unit_blocks) w.walk(&u, depth + 1);
        }
        void operator()(const UnitBlock* u) const {
          for (const AtomicUnit& a : u->atomic_units) w.walk(&a, depth + 1);
          for (const Variable& v : u->variables) w.walk(&v, depth + 1);
          for (const Comment& c : u->comments) w.walk(&c, depth + 1);
          for (const Attribute& a : u->attributes) w.walk(&a, depth + 1);
          for (const UnitBlock& n : u->nested_blocks) w.walk(&n, depth + 1);
        }
        void operator()(const AtomicUnit* a) const {
          for (const Attribute& attr : a->attributes) w.walk(&attr, depth + 1);
        }
        void operator()(const Attribute* a) const {
          for (const Attribute& n : a->nested) w.walk(&n, depth + 1);
        }
        void operator()(const Variable* v) const {
          for (const Variable& n : v->nested) w.walk(&n, depth + 1);
        }
        void operator()(const Comment*) const {}
      };
      std::visit(Children{*this, depth}, node);
    }
  };
  Walker{entries}.walk(root, 0);

  for (const Entry& e : entries) {
    for (int i = 0; i < e.depth; ++i) out << "  ";
    out << node_kind_name(e.node);
    std::string_view name = node_name(e.node);
    if (!name.empty()) out << " " << name;
    if (const SourceSpan* span = node_span(e.node)) {
      out << " [" << span->path << ":" << span->start_line << "-"
          << span->end_line << "]";
    }
    out << "\n";
  }
}

}  // namespace iaclint
