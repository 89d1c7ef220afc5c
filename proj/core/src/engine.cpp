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

#include "iaclint/engine.hpp"

#include <algorithm>
#include <tuple>

namespace iaclint {

std::vector<Smell> Detector::visit(NodeRef node, const AnalysisConfig& config,
                                   const VisitContext& ctx) const {
  struct Dispatch {
    const Detector& detector;
    const AnalysisConfig& config;
    const VisitContext& ctx;
    std::vector<Smell> operator()(const Project* p) const {
      return detector.check_project(*p, config, ctx);
    }
    std::vector<Smell> operator()(const Module* m) const {
      return detector.check_module(*m, config, ctx);
    }
    std::vector<Smell> operator()(const UnitBlock* u) const {
      return detector.check_unit_block(*u, config, ctx);
    }
    std::vector<Smell> operator()(const AtomicUnit* a) const {
      return detector.check_atomic_unit(*a, config, ctx);
    }
    std::vector<Smell> operator()(const Attribute* a) const {
      return detector.check_attribute(*a, config, ctx);
    }
    std::vector<Smell> operator()(const Variable* v) const {
      return detector.check_variable(*v, config, ctx);
    }
    std::vector<Smell> operator()(const Comment* c) const {
      return detector.check_comment(*c, config, ctx);
    }
  };
  return std::visit(Dispatch{*this, config, ctx}, node);
}

namespace {

struct Walker {
  const DetectorSet& detectors;
  const AnalysisConfig& config;
  Tech tech;
  std::vector<Smell>& findings;

  void apply(NodeRef node, bool file_root) const {
    VisitContext ctx{tech, file_root};
    for (const auto& detector : detectors) {
      std::vector<Smell> smells = detector->visit(node, config, ctx);
      findings.insert(findings.end(),
                      std::make_move_iterator(smells.begin()),
                      std::make_move_iterator(smells.end()));
    }
  }

  void walk_attribute(const Attribute& attr) const {
    apply(&attr, false);
    for (const Attribute& nested : attr.nested) walk_attribute(nested);
  }

  void walk_variable(const Variable& var) const {
    apply(&var, false);
    for (const Variable& nested : var.nested) walk_variable(nested);
  }

  void walk_unit_block(const UnitBlock& block, bool file_root) const {
    apply(&block, file_root);
    for (const AtomicUnit& unit : block.atomic_units) {
      apply(&unit, false);
      for (const Attribute& attr : unit.attributes) walk_attribute(attr);
    }
    for (const Variable& var : block.variables) walk_variable(var);
    for (const Comment& comment : block.comments) apply(&comment, false);
    for (const Attribute& attr : block.attributes) walk_attribute(attr);
    for (const UnitBlock& nested : block.nested_blocks) {
      walk_unit_block(nested, false);
    }
  }

  void walk(NodeRef root) const {
    struct Visitor {
      const Walker& w;
      void operator()(const Project* p) const {
        w.apply(p, false);
        for (const Module& m : p->modules) {
          w.apply(&m, false);
          for (const UnitBlock& u : m.unit_blocks) w.walk_unit_block(u, true);
        }
        for (const UnitBlock& u : p->unit_blocks) w.walk_unit_block(u, true);
      }
      void operator()(const Module* m) const {
        w.apply(m, false);
        for (const UnitBlock& u : m->unit_blocks) w.walk_unit_block(u, true);
      }
      void operator()(const UnitBlock* u) const { w.walk_unit_block(*u, true); }
      void operator()(const AtomicUnit* a) const {
        w.apply(a, false);
        for (const Attribute& attr : a->attributes) w.walk_attribute(attr);
      }
      void operator()(const Attribute* a) const { w.walk_attribute(*a); }
      void operator()(const Variable* v) const { w.walk_variable(*v); }
      void operator()(const Comment* c) const { w.apply(c, false); }
    };
    std::visit(Visitor{*this}, root);
  }
};

}  // namespace

SmellReport run_detectors(NodeRef root, const DetectorSet& detectors,
                          const AnalysisConfig& config, Tech tech) {
  SmellReport report;
  Walker{detectors, config, tech, report.findings}.walk(root);

  std::sort(report.findings.begin(), report.findings.end(),
            [](const Smell& a, const Smell& b) {
              return std::tie(a.span.path, a.span.start_line, a.code,
                              a.span.end_line, a.detail) <
                     std::tie(b.span.path, b.span.start_line, b.code,
                              b.span.end_line, b.detail);
            });
  auto last = std::unique(report.findings.begin(), report.findings.end(),
                          [](const Smell& a, const Smell& b) {
                            return a.code == b.code && a.span == b.span;
                          });
  report.findings.erase(last, report.findings.end());
  return report;
}

Smell make_smell(std::string_view code, SourceSpan span, std::string detail) {
  Smell smell;
  smell.code = std::string(code);
  smell.label = std::string(smell_label(code));
  smell.span = std::move(span);
  smell.detail = std::move(detail);
  return smell;
}

}  // namespace iaclint
