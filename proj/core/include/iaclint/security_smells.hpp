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
// The nine security smell detectors, keyword/rule-based over IR nodes.
// Matching is case-insensitive; text is tokenized on non-alphanumeric
// characters before whole-word matching, and a name matches a pattern when
// one of its tokens starts with it.

#pragma once

#include "iaclint/engine.hpp"

namespace iaclint {

/// Suspicious comment: a lexicon word occurring as a whole word.
class CommentSecurityDetector : public Detector {
 protected:
  std::vector<Smell> check_comment(const Comment&, const AnalysisConfig&,
                                   const VisitContext&) const override;
};

/// The six value rules: admin by default, empty password, hard-coded
/// secret, invalid IP binding, HTTP without TLS, weak cryptography. They
/// fire independently and cumulatively on one node; values carrying
/// interpolation markers are never treated as hard-coded.
class ValueSecurityDetector : public Detector {
 protected:
  std::vector<Smell> check_attribute(const Attribute&, const AnalysisConfig&,
                                     const VisitContext&) const override;
  std::vector<Smell> check_variable(const Variable&, const AnalysisConfig&,
                                    const VisitContext&) const override;
};

/// No integrity check (download command without a checksum marker nearby)
/// and missing default case (case/selector without a default branch).
class StructureSecurityDetector : public Detector {
 protected:
  std::vector<Smell> check_unit_block(const UnitBlock&, const AnalysisConfig&,
                                      const VisitContext&) const override;
  std::vector<Smell> check_atomic_unit(const AtomicUnit&,
                                       const AnalysisConfig&,
                                       const VisitContext&) const override;
  std::vector<Smell> check_attribute(const Attribute&, const AnalysisConfig&,
                                     const VisitContext&) const override;
  std::vector<Smell> check_variable(const Variable&, const AnalysisConfig&,
                                    const VisitContext&) const override;
};

DetectorSet make_security_detectors(Tech tech);

}  // namespace iaclint
