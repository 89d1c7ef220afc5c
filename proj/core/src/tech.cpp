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

#include "iaclint/tech.hpp"

namespace iaclint {

std::string_view tech_name(Tech tech) {
  switch (tech) {
    case Tech::ansible:
      return "ansible";
    case Tech::chef:
      return "chef";
    case Tech::docker:
      return "docker";
    case Tech::puppet:
      return "puppet";
    case Tech::terraform:
      return "terraform";
  }
  return "unknown";
}

std::optional<Tech> tech_from_name(std::string_view name) {
  for (Tech tech : kAllTechs) {
    if (tech_name(tech) == name) return tech;
  }
  return std::nullopt;
}

}  // namespace iaclint
