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

#include <string>

#include <benchmark/benchmark.h>

#include "iaclint/design_smells.hpp"
#include "iaclint/parsers.hpp"
#include "iaclint/security_smells.hpp"
#include "iaclint/traverse.hpp"

namespace {

std::string synthetic_manifest(int resources) {
  std::string source;
  for (int i = 0; i < resources; ++i) {
    source += "# resource number " + std::to_string(i) + "\n";
    source += "exec { 'task" + std::to_string(i) + "':\n";
    source += "  command => 'run step " + std::to_string(i) + "',\n";
    source += "  user    => 'svc',\n";
    source += "}\n";
  }
  return source;
}

std::string synthetic_dockerfile(int instructions) {
  std::string source = "FROM ubuntu:22.04 AS build\n";
  for (int i = 0; i < instructions; ++i) {
    source += "RUN step" + std::to_string(i) + " --in a --out b && cleanup\n";
  }
  return source;
}

void BM_PuppetParse(benchmark::State& state) {
  std::string source = synthetic_manifest(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iaclint::parse_puppet(source, "bench.pp"));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(source.size()));
}
BENCHMARK(BM_PuppetParse)->Arg(16)->Arg(256);

void BM_DockerParse(benchmark::State& state) {
  std::string source = synthetic_dockerfile(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iaclint::parse_docker(source, "Dockerfile"));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(source.size()));
}
BENCHMARK(BM_DockerParse)->Arg(16)->Arg(256);

void BM_Traverse(benchmark::State& state) {
  iaclint::TechParseResult parsed = iaclint::parse_puppet(
      synthetic_manifest(static_cast<int>(state.range(0))), "bench.pp");
  for (auto _ : state) {
    benchmark::DoNotOptimize(iaclint::traverse(&parsed.block));
  }
}
BENCHMARK(BM_Traverse)->Arg(256);

void BM_DesignAnalysis(benchmark::State& state) {
  iaclint::TechParseResult parsed = iaclint::parse_puppet(
      synthetic_manifest(static_cast<int>(state.range(0))), "bench.pp");
  iaclint::DetectorSet detectors =
      iaclint::make_design_detectors(iaclint::Tech::puppet);
  iaclint::AnalysisConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(iaclint::run_detectors(
        &parsed.block, detectors, config, iaclint::Tech::puppet));
  }
}
BENCHMARK(BM_DesignAnalysis)->Arg(16)->Arg(256);

void BM_SecurityAnalysis(benchmark::State& state) {
  iaclint::TechParseResult parsed = iaclint::parse_puppet(
      synthetic_manifest(static_cast<int>(state.range(0))), "bench.pp");
  iaclint::DetectorSet detectors =
      iaclint::make_security_detectors(iaclint::Tech::puppet);
  iaclint::AnalysisConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(iaclint::run_detectors(
        &parsed.block, detectors, config, iaclint::Tech::puppet));
  }
}
BENCHMARK(BM_SecurityAnalysis)->Arg(16)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
