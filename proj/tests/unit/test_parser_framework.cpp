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

#include <variant>

#include "iaclint/errors.hpp"
#include "iaclint/parser_framework.hpp"
#include "test_util.hpp"

using namespace iaclint;
using iaclint::testing::TempDir;

TEST_CASE("discover filters by technology and sorts lexicographically") {
  TempDir dir;
  dir.write("Dockerfile", "FROM alpine\n");
  dir.write("README.md", "docs\n");
  dir.write("b/main.tf", "locals { x = 1 }\n");
  dir.write("a/variables.tf", "variable \"r\" {}\n");

  auto docker = discover(dir.path(), Tech::docker);
  REQUIRE(docker.size() == 1);
  CHECK(docker[0].path == (dir.path() / "Dockerfile").string());

  auto terraform = discover(dir.path(), Tech::terraform);
  REQUIRE(terraform.size() == 2);
  CHECK(terraform[0].path == (dir.path() / "a/variables.tf").string());
  CHECK(terraform[1].path == (dir.path() / "b/main.tf").string());
}

TEST_CASE("ansible role members are tagged with their module") {
  TempDir dir;
  dir.write("playbook.yml", "- hosts: all\n  tasks: []\n");
  dir.write("roles/web/tasks/main.yml", "- name: t\n  command: ls\n");

  auto files = discover(dir.path(), Tech::ansible);
  REQUIRE(files.size() == 2);
  CHECK(files[0].role == FileRole::script);
  CHECK(files[1].role == FileRole::module_member);
  CHECK(files[1].module_name == "web");
}

TEST_CASE("empty directory yields an empty project") {
  TempDir dir;
  ParseOutcome outcome = parse_folder(dir.path(), Tech::puppet);
  const Project& project = std::get<Project>(outcome.result);
  CHECK(project.modules.empty());
  CHECK(project.unit_blocks.empty());
  CHECK(outcome.files_analyzed == 0);
}

TEST_CASE("loose manifests land on the project in path order") {
  TempDir dir;
  dir.write("b.pp", "$two = 2\n");
  dir.write("a.pp", "$one = 1\n");
  ParseOutcome outcome = parse_folder(dir.path(), Tech::puppet);
  const Project& project = std::get<Project>(outcome.result);
  CHECK(project.modules.empty());
  REQUIRE(project.unit_blocks.size() == 2);
  CHECK(project.unit_blocks[0].span.path == (dir.path() / "a.pp").string());
  CHECK(project.unit_blocks[1].span.path == (dir.path() / "b.pp").string());
}

TEST_CASE("ansible roles become modules, not loose blocks") {
  TempDir dir;
  dir.write("site.yml", "- hosts: all\n  tasks: []\n");
  dir.write("roles/web/tasks/main.yml", "- name: t\n  command: ls\n");
  ParseOutcome outcome = parse_folder(dir.path(), Tech::ansible);
  const Project& project = std::get<Project>(outcome.result);
  REQUIRE(project.modules.size() == 1);
  CHECK(project.modules[0].name == "web");
  CHECK(project.modules[0].unit_blocks.size() == 1);
  // The role file must not also appear at project level.
  CHECK(project.unit_blocks.size() == 1);
}

TEST_CASE("puppet module layout is detected by its manifests directory") {
  TempDir dir;
  dir.write("mymod/manifests/init.pp", "class mymod {\n}\n");
  ParseOutcome outcome = parse_folder(dir.path(), Tech::puppet);
  const Project& project = std::get<Project>(outcome.result);
  REQUIRE(project.modules.size() == 1);
  CHECK(project.modules[0].name == "mymod");
}

TEST_CASE("parse_module wraps a cookbook folder") {
  TempDir dir;
  dir.write("recipes/default.rb", "package 'curl' do\n  version '1'\nend\n");
  ParseOutcome outcome = parse_module(dir.path(), Tech::chef);
  const Module& module = std::get<Module>(outcome.result);
  CHECK(module.unit_blocks.size() == 1);
  CHECK(outcome.warnings.empty());
}

TEST_CASE("parse_module on a folder without recognized files warns") {
  TempDir dir;
  dir.write("README.md", "nothing\n");
  ParseOutcome outcome = parse_module(dir.path(), Tech::puppet);
  const Module& module = std::get<Module>(outcome.result);
  CHECK(module.unit_blocks.empty());
  REQUIRE(outcome.warnings.size() == 1);
}

TEST_CASE("parse_file reports empty files cleanly") {
  TempDir dir;
  auto path = dir.write("empty.pp", "");
  ParseOutcome outcome = parse_file(path, Tech::puppet);
  const UnitBlock& block = std::get<UnitBlock>(outcome.result);
  CHECK(block.atomic_units.empty());
  CHECK(block.variables.empty());
  CHECK(outcome.warnings.empty());
  CHECK(outcome.failed_files.empty());
  CHECK(outcome.files_analyzed == 1);
}

TEST_CASE("a syntax error degrades to a per-file failure") {
  TempDir dir;
  auto path = dir.write("broken.pp", "exec { 'x':\n  command => 'ls',\n");
  ParseOutcome outcome = parse_file(path, Tech::puppet);
  REQUIRE(outcome.failed_files.size() == 1);
  CHECK(outcome.failed_files[0].path == path.string());
  const UnitBlock& block = std::get<UnitBlock>(outcome.result);
  CHECK(block.name == path.string());
  CHECK(block.atomic_units.empty());
  CHECK(outcome.files_analyzed == 0);
}

TEST_CASE("one bad file never aborts folder analysis") {
  TempDir dir;
  dir.write("good1.pp", "$a = 1\n");
  dir.write("bad.pp", "exec { broken\n");
  dir.write("good2.pp", "$b = 2\n");
  ParseOutcome outcome = parse_folder(dir.path(), Tech::puppet);
  const Project& project = std::get<Project>(outcome.result);
  CHECK(project.unit_blocks.size() == 2);
  REQUIRE(outcome.failed_files.size() == 1);
  CHECK(outcome.failed_files[0].path == (dir.path() / "bad.pp").string());
  CHECK(outcome.files_analyzed == 2);
}

TEST_CASE("missing inputs are fatal io errors") {
  CHECK_THROWS_AS(parse_file("/nonexistent/x.pp", Tech::puppet), IoError);
  CHECK_THROWS_AS(discover("/nonexistent/dir", Tech::puppet), IoError);
}

TEST_CASE("discovery is deterministic") {
  TempDir dir;
  dir.write("c.pp", "$c = 3\n");
  dir.write("a.pp", "$a = 1\n");
  dir.write("sub/b.pp", "$b = 2\n");
  auto first = discover(dir.path(), Tech::puppet);
  auto second = discover(dir.path(), Tech::puppet);
  CHECK(first == second);
}
