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

#include <doctest.h>

#include <algorithm>

#include "iaclint/design_smells.hpp"
#include "iaclint/engine.hpp"
#include "iaclint/parsers.hpp"
#include "iaclint/report.hpp"
#include "iaclint/security_smells.hpp"
#include "test_util.hpp"

using namespace iaclint;

namespace {

UnitBlock commented_block() {
  TechParseResult parsed = parse_puppet(
      "# TODO fix this later\n"
      "$x = 1\n",
      "c.pp");
  return std::move(parsed.block);
}

}  // namespace

TEST_CASE("zero detectors produce an empty report") {
  UnitBlock block = commented_block();
  DetectorSet none;
  SmellReport report =
      run_detectors(&block, none, AnalysisConfig{}, Tech::puppet);
  CHECK(report.findings.empty());
}

TEST_CASE("every analysis applies even when one already matched") {
  // One comment node trips both the design comment rule and the security
  // suspicious-comment rule when run together.
  UnitBlock block = commented_block();
  DetectorSet detectors;
  detectors.push_back(std::make_unique<AvoidCommentsDetector>());
  detectors.push_back(std::make_unique<CommentSecurityDetector>());
  SmellReport report =
      run_detectors(&block, detectors, AnalysisConfig{}, Tech::puppet);
  REQUIRE(report.findings.size() == 2);
  CHECK(report.findings[0].code == "design_avoid_comments");
  CHECK(report.findings[1].code == "security_suspicious_comment");
  CHECK(report.findings[0].span.start_line ==
        report.findings[1].span.start_line);
}

TEST_CASE("reports are deterministic across runs") {
  UnitBlock block = commented_block();
  AnalysisConfig config;
  DetectorSet detectors = make_design_detectors(Tech::puppet);
  SmellReport first = run_detectors(&block, detectors, config, Tech::puppet);
  SmellReport second = run_detectors(&block, detectors, config, Tech::puppet);
  CHECK(emit_csv(first) == emit_csv(second));
}

TEST_CASE("detector registration order does not matter") {
  UnitBlock block = commented_block();
  AnalysisConfig config;

  DetectorSet forward = make_design_detectors(Tech::puppet);
  DetectorSet reversed = make_design_detectors(Tech::puppet);
  std::reverse(reversed.begin(), reversed.end());

  SmellReport a = run_detectors(&block, forward, config, Tech::puppet);
  SmellReport b = run_detectors(&block, reversed, config, Tech::puppet);
  CHECK(emit_csv(a) == emit_csv(b));
}

TEST_CASE("the full run equals the union of single-detector runs") {
  TechParseResult parsed = parse_puppet(
      "# TODO cleanup\n"
      "exec { 'a':\n"
      "  command => 'wget http://x/y && tar x',\n"
      "  user => 'root',\n"
      "}\n",
      "u.pp");
  AnalysisConfig config;

  DetectorSet all = make_security_detectors(Tech::puppet);
  SmellReport combined =
      run_detectors(&parsed.block, all, config, Tech::puppet);

  std::vector<std::pair<int, std::string>> merged;
  for (std::size_t i = 0; i < all.size(); ++i) {
    DetectorSet single;
    DetectorSet source = make_security_detectors(Tech::puppet);
    single.push_back(std::move(source[i]));
    SmellReport part =
        run_detectors(&parsed.block, single, config, Tech::puppet);
    for (const Smell& smell : part.findings) {
      merged.emplace_back(smell.span.start_line, smell.code);
    }
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  auto combined_pairs = iaclint::testing::finding_pairs(combined);
  std::sort(combined_pairs.begin(), combined_pairs.end());
  CHECK(combined_pairs == merged);
}

TEST_CASE("findings are sorted by path, line and code") {
  TechParseResult parsed = parse_puppet(
      "$x = 1\n"
      "# zebra comment\n"
      "# TODO alpha\n",
      "s.pp");
  DetectorSet detectors;
  detectors.push_back(std::make_unique<AvoidCommentsDetector>());
  detectors.push_back(std::make_unique<CommentSecurityDetector>());
  SmellReport report =
      run_detectors(&parsed.block, detectors, AnalysisConfig{}, Tech::puppet);
  REQUIRE(report.findings.size() == 3);
  CHECK(report.findings[0].span.start_line == 2);
  CHECK(report.findings[1].span.start_line == 3);
  CHECK(report.findings[1].code == "design_avoid_comments");
  CHECK(report.findings[2].code == "security_suspicious_comment");
}

TEST_CASE("identical code and span collapse to one finding") {
  UnitBlock block = commented_block();
  DetectorSet twice;
  twice.push_back(std::make_unique<AvoidCommentsDetector>());
  twice.push_back(std::make_unique<AvoidCommentsDetector>());
  SmellReport report =
      run_detectors(&block, twice, AnalysisConfig{}, Tech::puppet);
  CHECK(report.findings.size() == 1);
}

TEST_CASE("file_root context reaches only top-level blocks") {
  // A nested class must not be treated as a file root: the long-statement
  // check runs once over the file, not once per nested block.
  std::string long_line(150, 'x');
  TechParseResult parsed = parse_puppet(
      "class a {\n  $v = '" + long_line + "'\n}\n", "f.pp");
  DetectorSet detectors;
  detectors.push_back(std::make_unique<LongStatementDetector>());
  SmellReport report =
      run_detectors(&parsed.block, detectors, AnalysisConfig{}, Tech::puppet);
  CHECK(report.findings.size() == 1);
}
