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

#include <string>

namespace iaclint {

/// Anchors an IR node to raw text: 1-based inclusive line range plus the
/// verbatim slice of those lines (newline-normalized to LF, joined with
/// '\n', no trailing newline).
struct SourceSpan {
  std::string path;
  int start_line = 1;
  int end_line = 1;
  std::string raw_code;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

}  // namespace iaclint
