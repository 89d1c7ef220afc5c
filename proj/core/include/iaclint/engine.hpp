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
// The detector framework. A Detector implements one check method per IR
// node kind; the engine drives every detector over a depth-first walk of
// the IR, applying every check to every node (a node can carry several
// smells). Technology-specific behaviour is selected once, at detector
// construction.

#pragma once

#include <memory>
#include <vector>

#include "iaclint/config.hpp"
#include "iaclint/ir.hpp"
#include "iaclint/smell.hpp"
#include "iaclint/tech.hpp"

namespace iaclint {

struct VisitContext {
  Tech tech = Tech::puppet;
  /// True when the visited unit block is a file root (directly under a
  /// Project or Module, or the run root itself). File-scoped checks key on
  /// this.
  bool file_root = false;
};

class Detector {
 public:
  virtual ~Detector() = default;

  /// Smells found on this node alone; children are handled by the engine.
  std::vector<Smell> visit(NodeRef node, const AnalysisConfig& config,
                           const VisitContext& ctx) const;

 protected:
  virtual std::vector<Smell> check_project(const Project&,
                                           const AnalysisConfig&,
                                           const VisitContext&) const {
    return {};
  }
  virtual std::vector<Smell> check_module(const Module&, const AnalysisConfig&,
                                          const VisitContext&) const {
    return {};
  }
  virtual std::vector<Smell> check_unit_block(const UnitBlock&,
                                              const AnalysisConfig&,
                                              const VisitContext&) const {
    return {};
  }
  virtual std::vector<Smell> check_atomic_unit(const AtomicUnit&,
                                               const AnalysisConfig&,
                                               const VisitContext&) const {
    return {};
  }
  virtual std::vector<Smell> check_attribute(const Attribute&,
                                             const AnalysisConfig&,
                                             const VisitContext&) const {
    return {};
  }
  virtual std::vector<Smell> check_variable(const Variable&,
                                            const AnalysisConfig&,
                                            const VisitContext&) const {
    return {};
  }
  virtual std::vector<Smell> check_comment(const Comment&,
                                           const AnalysisConfig&,
                                           const VisitContext&) const {
    return {};
  }
};

using DetectorSet = std::vector<std::unique_ptr<Detector>>;

/// Applies every detector to every node of `root` in traversal order, then
/// sorts findings by (path, line, code) and collapses duplicates with
/// identical code and span. Deterministic: permuting the detector set does
/// not change the result.
SmellReport run_detectors(NodeRef root, const DetectorSet& detectors,
                          const AnalysisConfig& config, Tech tech);

Smell make_smell(std::string_view code, SourceSpan span, std::string detail);

}  // namespace iaclint
