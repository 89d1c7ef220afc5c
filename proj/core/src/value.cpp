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

#include "iaclint/value.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace iaclint {

Value Value::boolean(bool b) {
  Value v;
  v.data_ = b;
  return v;
}

Value Value::integer(std::int64_t i) {
  Value v;
  v.data_ = i;
  return v;
}

Value Value::floating(double d) {
  Value v;
  v.data_ = d;
  return v;
}

Value Value::string(std::string text, std::vector<InterpolationMarker> markers) {
  Value v;
  v.data_ = StringValue{std::move(text), std::move(markers)};
  return v;
}

Value Value::list(std::vector<Value> items) {
  Value v;
  v.data_ = std::move(items);
  return v;
}

bool Value::is_null() const {
  return std::holds_alternative<std::monostate>(data_);
}
bool Value::is_boolean() const { return std::holds_alternative<bool>(data_); }
bool Value::is_integer() const {
  return std::holds_alternative<std::int64_t>(data_);
}
bool Value::is_floating() const {
  return std::holds_alternative<double>(data_);
}
bool Value::is_string() const {
  return std::holds_alternative<StringValue>(data_);
}
bool Value::is_list() const {
  return std::holds_alternative<std::vector<Value>>(data_);
}
bool Value::is_scalar() const {
  return is_boolean() || is_integer() || is_floating() || is_string();
}

bool Value::as_boolean() const { return std::get<bool>(data_); }
std::int64_t Value::as_integer() const { return std::get<std::int64_t>(data_); }
double Value::as_floating() const { return std::get<double>(data_); }
const std::string& Value::as_string() const {
  return std::get<StringValue>(data_).text;
}
const std::vector<InterpolationMarker>& Value::markers() const {
  return std::get<StringValue>(data_).markers;
}
const std::vector<Value>& Value::as_list() const {
  return std::get<std::vector<Value>>(data_);
}

std::string Value::display() const {
  if (is_null()) return "";
  if (is_boolean()) return as_boolean() ? "true" : "false";
  if (is_integer()) return std::to_string(as_integer());
  if (is_floating()) {
    std::ostringstream os;
    os << as_floating();
    return os.str();
  }
  if (is_string()) return as_string();
  std::string out = "[";
  const auto& items = as_list();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i].display();
  }
  out += "]";
  return out;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace iaclint
