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

#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace iaclint {

/// The IaC technologies with a frontend in this tool.
enum class Tech { ansible, chef, docker, puppet, terraform };

inline constexpr std::array<Tech, 5> kAllTechs = {
    Tech::ansible, Tech::chef, Tech::docker, Tech::puppet, Tech::terraform};

std::string_view tech_name(Tech tech);
std::optional<Tech> tech_from_name(std::string_view name);

}  // namespace iaclint
