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
#include <string>

#include "iaclint/parsers.hpp"
#include "iaclint/security_smells.hpp"
#include "test_util.hpp"

using namespace iaclint;

namespace {

SmellReport run_security(const UnitBlock& block, Tech tech,
                         const AnalysisConfig& config = {}) {
  DetectorSet detectors = make_security_detectors(tech);
  return run_detectors(&block, detectors, config, tech);
}

std::vector<std::string> codes_of(const SmellReport& report) {
  std::vector<std::string> codes;
  for (const Smell& smell : report.findings) codes.push_back(smell.code);
  std::sort(codes.begin(), codes.end());
  return codes;
}

int count_code(const SmellReport& report, std::string_view code) {
  int count = 0;
  for (const Smell& smell : report.findings) {
    if (smell.code == code) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("suspicious comments match lexicon words as whole words") {
  SUBCASE("a TODO comment fires") {
    TechParseResult result =
        parse_puppet("# TODO fix auth bypass\n$x = 1\n", "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_suspicious_comment") == 1);
  }
  SUBCASE("a benign comment does not") {
    TechParseResult result =
        parse_puppet("# installs the package\n$x = 1\n", "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_suspicious_comment") == 0);
  }
  SUBCASE("hyphens split tokens, so todo-list still matches") {
    TechParseResult result =
        parse_puppet("# method todo-list renderer\n$x = 1\n", "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_suspicious_comment") == 1);
  }
}

TEST_CASE("an empty password value is reported") {
  TechParseResult result = parse_puppet(
      "user { 'svc':\n  password => '',\n}\n", "a.pp");
  SmellReport report = run_security(result.block, Tech::puppet);
  REQUIRE(count_code(report, "security_empty_password") == 1);
  CHECK(report.findings[0].span.start_line == 2);
  CHECK(count_code(report, "security_hardcoded_secret") == 0);
}

TEST_CASE("user root is an admin-by-default smell") {
  TechParseResult result = parse_puppet(
      "exec { 'x':\n  command => 'ls',\n  user => 'root',\n}\n", "a.pp");
  SmellReport report = run_security(result.block, Tech::puppet);
  CHECK(count_code(report, "security_admin_by_default") == 1);
  // The same node also counts as a hard-coded account literal; the value
  // rules fire independently and cumulatively.
  CHECK(count_code(report, "security_hardcoded_secret") == 1);
}

TEST_CASE("insecure url schemes are flagged at scheme boundaries") {
  SUBCASE("http fires") {
    TechParseResult result = parse_puppet(
        "$url = 'http://example.com/pkg'\n", "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_http_without_tls") == 1);
  }
  SUBCASE("https does not") {
    TechParseResult result = parse_puppet(
        "$url = 'https://example.com/pkg'\n", "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_http_without_tls") == 0);
  }
}

TEST_CASE("invalid bind addresses match exactly") {
  TechParseResult result = parse_puppet(
      "$bind = '0.0.0.0'\n$subnet = '10.0.0.0/8'\n", "a.pp");
  SmellReport report = run_security(result.block, Tech::puppet);
  CHECK(count_code(report, "security_invalid_ip_binding") == 1);
  CHECK(report.findings[0].span.start_line == 1);
}

TEST_CASE("weak crypto terms match as whole tokens") {
  SUBCASE("md5 in a value fires") {
    TechParseResult result =
        parse_puppet("$digest = 'hmac-md5'\n", "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_weak_crypto") == 1);
  }
  SUBCASE("md5sum is a different token") {
    TechParseResult result = parse_puppet("$tool = 'md5sum'\n", "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_weak_crypto") == 0);
  }
  SUBCASE("the attribute name alone can match") {
    TechParseResult result =
        parse_puppet("$md5_digest = 'abc'\n", "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_weak_crypto") == 1);
  }
}

TEST_CASE("hard-coded secrets respect the interpolation shield") {
  SUBCASE("a literal secret fires") {
    TechParseResult result =
        parse_puppet("$db_password = 'hunter2'\n", "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_hardcoded_secret") == 1);
  }
  SUBCASE("an interpolated value never fires") {
    TechParseResult result =
        parse_puppet("$db_password = \"${vault_secret}\"\n", "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_hardcoded_secret") == 0);
  }
  SUBCASE("a terraform reference never fires") {
    TechParseResult result = parse_terraform(
        "resource \"aws_db_instance\" \"db\" {\n"
        "  password = var.db_password\n"
        "}\n",
        "db.tf");
    SmellReport report = run_security(result.block, Tech::terraform);
    CHECK(count_code(report, "security_hardcoded_secret") == 0);
  }
  SUBCASE("non-secret names are not scanned") {
    TechParseResult result = parse_puppet("$region = 'us-east-1'\n", "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_hardcoded_secret") == 0);
  }
}

TEST_CASE("downloads demand a checksum marker somewhere on the unit") {
  SUBCASE("wget without any marker fires at the command line") {
    TechParseResult result = parse_puppet(
        "exec { 'fetch':\n"
        "  command => 'wget https://x/pkg.tgz',\n"
        "}\n",
        "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    REQUIRE(count_code(report, "security_no_integrity_check") == 1);
    CHECK(report.findings[0].span.start_line == 2);
  }
  SUBCASE("a sibling checksum attribute silences the rule") {
    TechParseResult result = parse_puppet(
        "exec { 'fetch':\n"
        "  command => 'wget https://x/pkg.tgz',\n"
        "  checksum256 => 'abc123',\n"
        "}\n",
        "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_no_integrity_check") == 0);
  }
  SUBCASE("a verification step inside the command silences the rule") {
    TechParseResult result = parse_puppet(
        "exec { 'fetch':\n"
        "  command => 'wget https://x/p.tgz && sha256sum -c p.sum',\n"
        "}\n",
        "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_no_integrity_check") == 0);
  }
  SUBCASE("docker curl downloads are recognized") {
    TechParseResult result = parse_docker(
        "FROM alpine\nRUN curl -o /pkg https://x/pkg\n", "Dockerfile");
    SmellReport report = run_security(result.block, Tech::docker);
    CHECK(count_code(report, "security_no_integrity_check") == 1);
  }
}

TEST_CASE("case blocks without a default branch are reported") {
  SUBCASE("missing default fires at the case line") {
    TechParseResult result = parse_puppet(
        "case $os {\n  'debian': { $p = 'a' }\n}\n", "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    REQUIRE(count_code(report, "security_missing_default") == 1);
    CHECK(report.findings[0].span.start_line == 1);
  }
  SUBCASE("a default branch silences the rule") {
    TechParseResult result = parse_puppet(
        "case $os {\n  'debian': { $p = 'a' }\n  default: { $p = 'b' }\n}\n",
        "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_missing_default") == 0);
  }
  SUBCASE("selector values without a default entry are reported") {
    TechParseResult result = parse_puppet(
        "file { 'cfg':\n"
        "  mode => $secure ? { true => '0600' },\n"
        "}\n",
        "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_missing_default") == 1);
  }
  SUBCASE("selector values with a default entry are fine") {
    TechParseResult result = parse_puppet(
        "file { 'cfg':\n"
        "  mode => $secure ? { true => '0600', default => '0644' },\n"
        "}\n",
        "a.pp");
    SmellReport report = run_security(result.block, Tech::puppet);
    CHECK(count_code(report, "security_missing_default") == 0);
  }
}

TEST_CASE("value smells accumulate on one node") {
  TechParseResult result = parse_puppet(
      "$user_token = 'md5:http://x/y'\n", "a.pp");
  SmellReport report = run_security(result.block, Tech::puppet);
  std::vector<std::string> expected = {"security_hardcoded_secret",
                                       "security_http_without_tls",
                                       "security_weak_crypto"};
  CHECK(codes_of(report) == expected);
}

TEST_CASE("growing a lexicon only adds findings") {
  TechParseResult result = parse_puppet(
      "# review this workaround\n$x = 1\n", "a.pp");
  SmellReport base = run_security(result.block, Tech::puppet);
  CHECK(count_code(base, "security_suspicious_comment") == 0);

  AnalysisConfig config;
  config.suspicious_comment_words.push_back("workaround");
  SmellReport grown = run_security(result.block, Tech::puppet, config);
  CHECK(count_code(grown, "security_suspicious_comment") == 1);
  CHECK(grown.findings.size() >= base.findings.size());
}
