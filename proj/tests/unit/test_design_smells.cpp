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

#include <string>

#include "iaclint/design_smells.hpp"
#include "iaclint/parsers.hpp"
#include "test_util.hpp"

using namespace iaclint;
using iaclint::testing::block_from_text;
using iaclint::testing::finding_pairs;

namespace {

SmellReport run_design(const UnitBlock& block, Tech tech,
                       const AnalysisConfig& config = {}) {
  DetectorSet detectors = make_design_detectors(tech);
  return run_detectors(&block, detectors, config, tech);
}

SmellReport run_one(const UnitBlock& block, std::unique_ptr<Detector> detector,
                    Tech tech, const AnalysisConfig& config = {}) {
  DetectorSet set;
  set.push_back(std::move(detector));
  return run_detectors(&block, set, config, tech);
}

int count_code(const SmellReport& report, std::string_view code) {
  int count = 0;
  for (const Smell& smell : report.findings) {
    if (smell.code == code) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("long statement honors the comparator boundary") {
  std::string line140(140, 'x');
  UnitBlock block = block_from_text("a.pp", line140 + "\n");
  AnalysisConfig config;

  SUBCASE("exactly 140 with the strict default does not fire") {
    SmellReport report =
        run_one(block, std::make_unique<LongStatementDetector>(), Tech::puppet,
                config);
    CHECK(count_code(report, "design_long_statement") == 0);
  }
  SUBCASE("exactly 140 with the inclusive comparator fires") {
    config.long_statement_inclusive = true;
    SmellReport report =
        run_one(block, std::make_unique<LongStatementDetector>(), Tech::puppet,
                config);
    CHECK(count_code(report, "design_long_statement") == 1);
  }
  SUBCASE("141 characters fire under defaults") {
    UnitBlock longer = block_from_text("a.pp", std::string(141, 'x') + "\n");
    SmellReport report = run_one(
        longer, std::make_unique<LongStatementDetector>(), Tech::puppet,
        config);
    REQUIRE(count_code(report, "design_long_statement") == 1);
    CHECK(report.findings[0].span.start_line == 1);
  }
  SUBCASE("139 characters never fire") {
    UnitBlock shorter = block_from_text("a.pp", std::string(139, 'x') + "\n");
    config.long_statement_inclusive = true;
    SmellReport report = run_one(
        shorter, std::make_unique<LongStatementDetector>(), Tech::puppet,
        config);
    CHECK(count_code(report, "design_long_statement") == 0);
  }
}

TEST_CASE("long statement counts code points, not bytes") {
  // 139 euro signs are three bytes each but must not fire at limit 140.
  std::string line;
  for (int i = 0; i < 139; ++i) line += "\xE2\x82\xAC";
  UnitBlock block = block_from_text("a.pp", line + "\n");
  SmellReport report = run_one(
      block, std::make_unique<LongStatementDetector>(), Tech::puppet, {});
  CHECK(count_code(report, "design_long_statement") == 0);
}

TEST_CASE("avoid comments fires once per comment node") {
  TechParseResult none = parse_puppet("$x = 1\n", "a.pp");
  CHECK(count_code(run_design(none.block, Tech::puppet),
                   "design_avoid_comments") == 0);

  TechParseResult three =
      parse_puppet("# one\n# two\n# three\n$x = 1\n", "a.pp");
  SmellReport report = run_design(three.block, Tech::puppet);
  CHECK(count_code(report, "design_avoid_comments") == 3);
}

TEST_CASE("puppet alignment accepts arrows one gap past the longest name") {
  std::string aligned =
      "exec { 'x':\n"
      "  command => 'ls',\n"
      "  unless  => 'test -f /x',\n"
      "  user    => 'web',\n"
      "}\n";
  TechParseResult result = parse_puppet(aligned, "a.pp");
  SmellReport report =
      run_one(result.block, std::make_unique<ImproperAlignmentDetector>(
                                Tech::puppet),
              Tech::puppet);
  CHECK(count_code(report, "design_improper_alignment") == 0);
}

TEST_CASE("an arrow two spaces past the longest name is misaligned") {
  std::string misaligned =
      "exec { 'x':\n"
      "  command  => 'ls',\n"
      "  unless   => 'test -f /x',\n"
      "  user     => 'web',\n"
      "}\n";
  TechParseResult result = parse_puppet(misaligned, "a.pp");
  SmellReport report =
      run_one(result.block, std::make_unique<ImproperAlignmentDetector>(
                                Tech::puppet),
              Tech::puppet);
  REQUIRE(count_code(report, "design_improper_alignment") == 1);
  CHECK(report.findings[0].span.start_line == 2);
}

TEST_CASE("inconsistent attribute indentation is misaligned") {
  std::string ragged =
      "exec { 'x':\n"
      "  command => 'ls',\n"
      "    user  => 'web',\n"
      "}\n";
  TechParseResult result = parse_puppet(ragged, "a.pp");
  SmellReport report =
      run_one(result.block, std::make_unique<ImproperAlignmentDetector>(
                                Tech::puppet),
              Tech::puppet);
  REQUIRE(count_code(report, "design_improper_alignment") == 1);
  CHECK(report.findings[0].span.start_line == 3);
}

TEST_CASE("hash-valued attributes are exempt from arrow checks") {
  std::string source =
      "file { 'cfg':\n"
      "  mode    => '0644',\n"
      "  options => { 'a' => 1 },\n"
      "}\n";
  TechParseResult result = parse_puppet(source, "a.pp");
  SmellReport report =
      run_one(result.block, std::make_unique<ImproperAlignmentDetector>(
                                Tech::puppet),
              Tech::puppet);
  CHECK(count_code(report, "design_improper_alignment") == 0);
}

TEST_CASE("generic alignment flags tabs and ragged indents") {
  AtomicUnit unit;
  unit.type = "file";
  unit.span = {"t.yml", 1, 3, ""};
  Attribute a;
  a.name = "path";
  a.value = Value::string("/tmp/a");
  a.span = {"t.yml", 2, 2, "  path: /tmp/a"};
  Attribute b;
  b.name = "mode";
  b.value = Value::string("0777");
  b.span = {"t.yml", 3, 3, "\tmode: '0777'"};
  unit.attributes.push_back(a);
  unit.attributes.push_back(b);
  UnitBlock block;
  block.span = {"t.yml", 1, 3, ""};
  block.atomic_units.push_back(unit);

  SmellReport report =
      run_one(block, std::make_unique<ImproperAlignmentDetector>(
                         Tech::ansible),
              Tech::ansible);
  REQUIRE(count_code(report, "design_improper_alignment") == 1);
  CHECK(report.findings[0].span.start_line == 3);
}

TEST_CASE("long resource compares the physical line count") {
  const auto resource_of = [](int lines) {
    std::string source = "exec { 'x':\n  command => 'ls',\n";
    for (int i = 0; i < lines - 3; ++i) source += "  # pad\n";
    source += "}\n";
    return source;
  };
  SUBCASE("13 lines over the default 12 fire") {
    TechParseResult result = parse_puppet(resource_of(13), "a.pp");
    SmellReport report = run_one(
        result.block, std::make_unique<LongResourceDetector>(), Tech::puppet);
    REQUIRE(count_code(report, "design_long_resource") == 1);
    CHECK(report.findings[0].span.start_line == 1);
  }
  SUBCASE("12 lines do not fire") {
    TechParseResult result = parse_puppet(resource_of(12), "a.pp");
    SmellReport report = run_one(
        result.block, std::make_unique<LongResourceDetector>(), Tech::puppet);
    CHECK(count_code(report, "design_long_resource") == 0);
  }
  SUBCASE("a lowered threshold fires on a six-line resource") {
    AnalysisConfig config;
    config.long_resource_max_lines = 5;
    TechParseResult result = parse_puppet(resource_of(6), "a.pp");
    SmellReport report =
        run_one(result.block, std::make_unique<LongResourceDetector>(),
                Tech::puppet, config);
    CHECK(count_code(report, "design_long_resource") == 1);
  }
}

TEST_CASE("duplicate blocks report every member of the group") {
  std::string source =
      "exec { 'one':\n"
      "  command => 'ls',\n"
      "  user => 'web',\n"
      "}\n"
      "exec { 'two':\n"
      "  command => 'ls',\n"
      "  user => 'web',\n"
      "}\n";
  TechParseResult result = parse_puppet(source, "a.pp");
  SmellReport report = run_one(
      result.block, std::make_unique<DuplicateBlockDetector>(), Tech::puppet);
  REQUIRE(count_code(report, "design_duplicate_block") == 2);
  CHECK(report.findings[0].span.start_line == 1);
  CHECK(report.findings[1].span.start_line == 5);
}

TEST_CASE("duplicates are scoped to one file tree") {
  std::string source =
      "exec { 'one':\n  command => 'ls',\n  user => 'web',\n}\n";
  TechParseResult a = parse_puppet(source, "a.pp");
  TechParseResult b = parse_puppet(source, "b.pp");
  Project project;
  project.name = "p";
  project.unit_blocks.push_back(std::move(a.block));
  project.unit_blocks.push_back(std::move(b.block));

  DetectorSet set;
  set.push_back(std::make_unique<DuplicateBlockDetector>());
  SmellReport report =
      run_detectors(&project, set, AnalysisConfig{}, Tech::puppet);
  CHECK(count_code(report, "design_duplicate_block") == 0);
}

TEST_CASE("a single resource is never a duplicate") {
  TechParseResult result = parse_puppet(
      "exec { 'one':\n  command => 'ls',\n  user => 'web',\n}\n", "a.pp");
  SmellReport report = run_one(
      result.block, std::make_unique<DuplicateBlockDetector>(), Tech::puppet);
  CHECK(count_code(report, "design_duplicate_block") == 0);
}

TEST_CASE("units below the attribute minimum are not grouped") {
  std::string source =
      "exec { 'one':\n  command => 'ls',\n}\n"
      "exec { 'two':\n  command => 'ls',\n}\n";
  TechParseResult result = parse_puppet(source, "a.pp");
  SmellReport report = run_one(
      result.block, std::make_unique<DuplicateBlockDetector>(), Tech::puppet);
  CHECK(count_code(report, "design_duplicate_block") == 0);
}

TEST_CASE("misplaced attribute enforces the precedence prefix") {
  SUBCASE("ensure first is fine") {
    TechParseResult result = parse_puppet(
        "file { '/tmp/a':\n  ensure => present,\n  mode => '0644',\n}\n",
        "a.pp");
    SmellReport report =
        run_one(result.block, std::make_unique<MisplacedAttributeDetector>(),
                Tech::puppet);
    CHECK(count_code(report, "design_misplaced_attribute") == 0);
  }
  SUBCASE("ensure second fires at its own line") {
    TechParseResult result = parse_puppet(
        "file { '/tmp/a':\n  mode => '0644',\n  ensure => present,\n}\n",
        "a.pp");
    SmellReport report =
        run_one(result.block, std::make_unique<MisplacedAttributeDetector>(),
                Tech::puppet);
    REQUIRE(count_code(report, "design_misplaced_attribute") == 1);
    CHECK(report.findings[0].span.start_line == 3);
  }
  SUBCASE("resources without ordered attributes are vacuous") {
    TechParseResult result = parse_puppet(
        "file { '/tmp/a':\n  mode => '0644',\n  owner => 'web',\n}\n",
        "a.pp");
    SmellReport report =
        run_one(result.block, std::make_unique<MisplacedAttributeDetector>(),
                Tech::puppet);
    CHECK(count_code(report, "design_misplaced_attribute") == 0);
  }
}

TEST_CASE("multifaceted abstraction counts top-level shell statements") {
  SUBCASE("a pipe counts as a second statement") {
    TechParseResult result = parse_puppet(
        "exec { 'x':\n  command => \"mysql -e 'x' | grep y\",\n}\n", "a.pp");
    SmellReport report = run_one(
        result.block,
        std::make_unique<MultifacetedAbstractionDetector>(Tech::puppet),
        Tech::puppet);
    REQUIRE(count_code(report, "design_multifaceted_abstraction") == 1);
    CHECK(report.findings[0].span.start_line == 2);
  }
  SUBCASE("a single command is fine") {
    TechParseResult result = parse_puppet(
        "exec { 'x':\n  command => 'systemctl restart nginx',\n}\n", "a.pp");
    SmellReport report = run_one(
        result.block,
        std::make_unique<MultifacetedAbstractionDetector>(Tech::puppet),
        Tech::puppet);
    CHECK(count_code(report, "design_multifaceted_abstraction") == 0);
  }
  SUBCASE("multi-line continuations are joined before counting") {
    TechParseResult result = parse_puppet(
        "exec { 'x':\n  command => \"stop \\\n    && restart\",\n}\n",
        "a.pp");
    SmellReport report = run_one(
        result.block,
        std::make_unique<MultifacetedAbstractionDetector>(Tech::puppet),
        Tech::puppet);
    CHECK(count_code(report, "design_multifaceted_abstraction") == 1);
  }
  SUBCASE("docker shell units include their command word") {
    TechParseResult result =
        parse_docker("FROM alpine\nRUN ps aux | grep init\n", "Dockerfile");
    SmellReport report = run_one(
        result.block,
        std::make_unique<MultifacetedAbstractionDetector>(Tech::docker),
        Tech::docker);
    CHECK(count_code(report, "design_multifaceted_abstraction") == 1);
  }
  SUBCASE("docker instruction units are not commands") {
    TechParseResult result =
        parse_docker("FROM alpine\nCOPY a b\n", "Dockerfile");
    SmellReport report = run_one(
        result.block,
        std::make_unique<MultifacetedAbstractionDetector>(Tech::docker),
        Tech::docker);
    CHECK(count_code(report, "design_multifaceted_abstraction") == 0);
  }
}

TEST_CASE("too many variables uses declarations over non-blank lines") {
  const auto fixture = [](int vars, int lines) {
    std::string source;
    for (int i = 0; i < vars; ++i) {
      source += "$v" + std::to_string(i) + " = " + std::to_string(i) + "\n";
    }
    for (int i = vars; i < lines; ++i) source += "notify { 'n" +
                                                 std::to_string(i) + "': }\n";
    return source;
  };
  SUBCASE("4 of 10 exceeds the 0.3 default") {
    TechParseResult result = parse_puppet(fixture(4, 10), "a.pp");
    SmellReport report =
        run_one(result.block, std::make_unique<TooManyVariablesDetector>(),
                Tech::puppet);
    CHECK(count_code(report, "design_too_many_variables") == 1);
  }
  SUBCASE("3 of 10 sits exactly on the boundary and does not fire") {
    TechParseResult result = parse_puppet(fixture(3, 10), "a.pp");
    SmellReport report =
        run_one(result.block, std::make_unique<TooManyVariablesDetector>(),
                Tech::puppet);
    CHECK(count_code(report, "design_too_many_variables") == 0);
  }
  SUBCASE("references alone never count") {
    std::string source;
    for (int i = 0; i < 10; ++i) {
      source += "notify { 'x" + std::to_string(i) + "':\n"
                "  message => \"${x} ${x} ${x} ${x} ${x}\",\n}\n";
    }
    TechParseResult result = parse_puppet(source, "a.pp");
    SmellReport report =
        run_one(result.block, std::make_unique<TooManyVariablesDetector>(),
                Tech::puppet);
    CHECK(count_code(report, "design_too_many_variables") == 0);
  }
}

TEST_CASE("unguarded variable flags bare references in interpolating strings") {
  SUBCASE("bare reference fires") {
    TechParseResult result =
        parse_puppet("$greeting = \"Hello $user\"\n", "a.pp");
    SmellReport report =
        run_one(result.block, std::make_unique<UnguardedVariableDetector>(),
                Tech::puppet);
    REQUIRE(count_code(report, "design_unguarded_variable") == 1);
    CHECK(report.findings[0].span.start_line == 1);
  }
  SUBCASE("brace-delimited reference is fine") {
    TechParseResult result =
        parse_puppet("$greeting = \"Hello ${user}\"\n", "a.pp");
    SmellReport report =
        run_one(result.block, std::make_unique<UnguardedVariableDetector>(),
                Tech::puppet);
    CHECK(count_code(report, "design_unguarded_variable") == 0);
  }
  SUBCASE("single quotes never interpolate") {
    TechParseResult result =
        parse_puppet("$price = 'costs $5'\n", "a.pp");
    SmellReport report =
        run_one(result.block, std::make_unique<UnguardedVariableDetector>(),
                Tech::puppet);
    CHECK(count_code(report, "design_unguarded_variable") == 0);
  }
  SUBCASE("disabled by default outside puppet") {
    TechParseResult result =
        parse_docker("FROM alpine\nENV GREET=$user\n", "Dockerfile");
    SmellReport report =
        run_one(result.block, std::make_unique<UnguardedVariableDetector>(),
                Tech::docker);
    CHECK(count_code(report, "design_unguarded_variable") == 0);

    AnalysisConfig config;
    config.unguarded_variable_techs = {"puppet", "docker"};
    TechParseResult again =
        parse_docker("FROM alpine\nENV GREET=$user\n", "Dockerfile");
    SmellReport enabled =
        run_one(again.block, std::make_unique<UnguardedVariableDetector>(),
                Tech::docker, config);
    CHECK(count_code(enabled, "design_unguarded_variable") == 1);
  }
}

TEST_CASE("raising the long-statement limit is monotone") {
  std::string text;
  for (int len : {100, 150, 200}) text += std::string(len, 'y') + "\n";
  UnitBlock block = block_from_text("m.pp", text);
  AnalysisConfig low, high;
  low.long_statement_max = 120;
  high.long_statement_max = 180;
  int low_count = count_code(
      run_one(block, std::make_unique<LongStatementDetector>(), Tech::puppet,
              low),
      "design_long_statement");
  int high_count = count_code(
      run_one(block, std::make_unique<LongStatementDetector>(), Tech::puppet,
              high),
      "design_long_statement");
  CHECK(low_count == 2);
  CHECK(high_count == 1);
}
