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
// The nine design & implementation smell detectors.

#pragma once

#include <memory>

#include "iaclint/engine.hpp"

namespace iaclint {

/// One smell per physical line longer than `long_statement_max` characters
/// (code points, newline excluded). Strict comparator by default; the
/// inclusive flag switches to `>=`.
class LongStatementDetector : public Detector {
 protected:
  std::vector<Smell> check_unit_block(const UnitBlock&, const AnalysisConfig&,
                                      const VisitContext&) const override;
};

/// One smell per comment node.
class AvoidCommentsDetector : public Detector {
 protected:
  std::vector<Smell> check_comment(const Comment&, const AnalysisConfig&,
                                   const VisitContext&) const override;
};

/// Puppet: every hash rocket sits exactly `alignment_gap` spaces past the
/// longest attribute name, and attribute indentation is uniform; attributes
/// with hash values are not arrow-checked. Other technologies: attribute
/// lines of one unit must use consistent space indentation (no tabs).
class ImproperAlignmentDetector : public Detector {
 public:
  explicit ImproperAlignmentDetector(Tech tech);
  ~ImproperAlignmentDetector() override;

 protected:
  std::vector<Smell> check_atomic_unit(const AtomicUnit&,
                                       const AnalysisConfig&,
                                       const VisitContext&) const override;

 private:
  class Strategy;
  class PuppetStrategy;
  class GenericStrategy;
  std::unique_ptr<const Strategy> strategy_;
};

/// Units spanning more than `long_resource_max_lines` physical lines.
class LongResourceDetector : public Detector {
 protected:
  std::vector<Smell> check_atomic_unit(const AtomicUnit&,
                                       const AnalysisConfig&,
                                       const VisitContext&) const override;
};

/// Structurally equivalent atomic units (titles ignored) within one file
/// tree; every member of a duplicate group is reported. Accumulates within
/// a single file-root visit only.
class DuplicateBlockDetector : public Detector {
 protected:
  std::vector<Smell> check_unit_block(const UnitBlock&, const AnalysisConfig&,
                                      const VisitContext&) const override;
};

/// Attributes named in `misplaced_order` must come first, in that order.
class MisplacedAttributeDetector : public Detector {
 protected:
  std::vector<Smell> check_atomic_unit(const AtomicUnit&,
                                       const AnalysisConfig&,
                                       const VisitContext&) const override;
};

/// Command-bearing attributes holding more than one shell statement
/// (separators `&&`, `||`, `;`, `|` at top level, continuations joined).
class MultifacetedAbstractionDetector : public Detector {
 public:
  explicit MultifacetedAbstractionDetector(Tech tech);

 protected:
  std::vector<Smell> check_atomic_unit(const AtomicUnit&,
                                       const AnalysisConfig&,
                                       const VisitContext&) const override;

 private:
  bool docker_;
};

/// Variable declarations per non-blank line above `too_many_vars_ratio`;
/// references are not counted.
class TooManyVariablesDetector : public Detector {
 protected:
  std::vector<Smell> check_unit_block(const UnitBlock&, const AnalysisConfig&,
                                      const VisitContext&) const override;
};

/// Bare `$name` references inside interpolating strings (Puppet by
/// default; other technologies opt in via `unguarded_variable_techs`).
class UnguardedVariableDetector : public Detector {
 protected:
  std::vector<Smell> check_attribute(const Attribute&, const AnalysisConfig&,
                                     const VisitContext&) const override;
  std::vector<Smell> check_variable(const Variable&, const AnalysisConfig&,
                                    const VisitContext&) const override;
};

DetectorSet make_design_detectors(Tech tech);

}  // namespace iaclint
