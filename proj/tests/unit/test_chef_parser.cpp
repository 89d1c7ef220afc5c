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

#include "iaclint/errors.hpp"
#include "iaclint/parsers.hpp"
#include "test_util.hpp"

using namespace iaclint;
using iaclint::testing::data_dir;
using iaclint::testing::read_file;

TEST_CASE("hive metastore recipe lowers to one comment and one execute") {
  std::string source = read_file(data_dir() / "fig3" / "fig3b.rb");
  TechParseResult result = parse_chef(source, "fig3b.rb");
  const UnitBlock& block = result.block;

  REQUIRE(block.comments.size() == 1);
  CHECK(block.comments[0].text ==
        "Hive metastore MySQL database need a (...)");

  REQUIRE(block.atomic_units.size() == 1);
  const AtomicUnit& unit = block.atomic_units[0];
  CHECK(unit.type == "execute");
  CHECK(unit.name == "hive_mysql_create_database");
  REQUIRE(unit.attributes.size() == 3);
  CHECK(unit.attributes[0].name == "command");
  CHECK(unit.attributes[0].value.as_string() == "/usr/bin/mysql (...)");
  CHECK(unit.attributes[1].name == "not_if");
  CHECK(unit.attributes[2].name == "user");
  CHECK(unit.attributes[2].value.as_string() == "root");
  CHECK(unit.span.start_line == 2);
  CHECK(unit.span.end_line == 6);
}

TEST_CASE("simple assignment becomes an integer variable") {
  TechParseResult result = parse_chef("x = 5\n", "r.rb");
  REQUIRE(result.block.variables.size() == 1);
  CHECK(result.block.variables[0].name == "x");
  CHECK(result.block.variables[0].value.as_integer() == 5);
}

TEST_CASE("nested control flow inside a resource is skipped with a warning") {
  std::string source =
      "package 'httpd' do\n"
      "  version '2.4'\n"
      "  if node['debug']\n"
      "    action :nothing\n"
      "  end\n"
      "  retries 3\n"
      "end\n";
  TechParseResult result = parse_chef(source, "r.rb");
  REQUIRE(result.block.atomic_units.size() == 1);
  const AtomicUnit& unit = result.block.atomic_units[0];
  REQUIRE(unit.attributes.size() == 2);
  CHECK(unit.attributes[0].name == "version");
  CHECK(unit.attributes[1].name == "retries");
  CHECK(result.warnings.size() == 1);
}

TEST_CASE("unterminated resource block is a parse failure") {
  CHECK_THROWS_AS(parse_chef("execute 'x' do\n  command 'ls'\n", "r.rb"),
                  ParseError);
}

TEST_CASE("unrecognized top-level lines are skipped with warnings") {
  TechParseResult result =
      parse_chef("include_recipe 'apt'\nx = 1\n", "r.rb");
  CHECK(result.block.variables.size() == 1);
  CHECK(result.warnings.size() == 1);
}

TEST_CASE("double-quoted values carry interpolation markers") {
  std::string source =
      "execute 'greet' do\n"
      "  command \"echo #{node['fqdn']}\"\n"
      "end\n";
  TechParseResult result = parse_chef(source, "r.rb");
  const Attribute& attr = result.block.atomic_units[0].attributes[0];
  REQUIRE(attr.value.markers().size() == 1);
  CHECK(attr.value.markers()[0].braced);
}

TEST_CASE("duplicate attributes keep the first occurrence and warn") {
  std::string source =
      "execute 'x' do\n"
      "  command 'a'\n"
      "  command 'b'\n"
      "end\n";
  TechParseResult result = parse_chef(source, "r.rb");
  const AtomicUnit& unit = result.block.atomic_units[0];
  REQUIRE(unit.attributes.size() == 1);
  CHECK(unit.attributes[0].value.as_string() == "a");
  CHECK(result.warnings.size() == 1);
}

TEST_CASE("bare attribute names read as boolean flags") {
  std::string source =
      "directory '/tmp/x' do\n"
      "  recursive true\n"
      "  mode '0755'\n"
      "end\n";
  TechParseResult result = parse_chef(source, "r.rb");
  const AtomicUnit& unit = result.block.atomic_units[0];
  CHECK(unit.attributes[0].value.is_boolean());
  CHECK(unit.attributes[1].value.as_string() == "0755");
}

TEST_CASE("empty recipe parses cleanly") {
  TechParseResult result = parse_chef("", "r.rb");
  CHECK(result.block.atomic_units.empty());
  CHECK(result.warnings.empty());
}
