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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace iaclint {

/// A variable reference embedded in a string value. Offsets are byte
/// positions into the string content, [begin, end). `braced` is true for
/// delimiter-guarded forms (`${x}`, `{{ x }}`, `#{x}`) and false for bare
/// `$x` references inside interpolating strings.
struct InterpolationMarker {
  int begin = 0;
  int end = 0;
  bool braced = true;

  friend bool operator==(const InterpolationMarker&,
                         const InterpolationMarker&) = default;
};

struct StringValue {
  std::string text;
  std::vector<InterpolationMarker> markers;

  friend bool operator==(const StringValue&, const StringValue&) = default;
};

/// Right-hand side of an attribute or variable. Values are never evaluated;
/// interpolation is recorded as markers, and structured constructs the
/// frontends do not model (hashes, selectors) stay raw strings.
class Value {
 public:
  Value() = default;  // null

  static Value null() { return Value(); }
  static Value boolean(bool b);
  static Value integer(std::int64_t i);
  static Value floating(double d);
  static Value string(std::string text,
                      std::vector<InterpolationMarker> markers = {});
  static Value list(std::vector<Value> items);

  bool is_null() const;
  bool is_boolean() const;
  bool is_integer() const;
  bool is_floating() const;
  bool is_string() const;
  bool is_list() const;
  /// True for boolean/integer/float/string.
  bool is_scalar() const;

  bool as_boolean() const;
  std::int64_t as_integer() const;
  double as_floating() const;
  const std::string& as_string() const;
  const std::vector<InterpolationMarker>& markers() const;
  const std::vector<Value>& as_list() const;

  /// Canonical single-line rendering, used for reports and multiset keys.
  std::string display() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  std::variant<std::monostate, bool, std::int64_t, double, StringValue,
               std::vector<Value>>
      data_;
};

/// Collapses whitespace runs to single spaces and trims both ends.
std::string normalize_whitespace(std::string_view text);

}  // namespace iaclint
