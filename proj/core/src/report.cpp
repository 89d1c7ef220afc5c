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

#include "iaclint/report.hpp"

#include <algorithm>
#include <vector>

namespace iaclint {

namespace {

std::string csv_field(const std::string& value) {
  bool needs_quotes = value.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

std::string latex_escape(const std::string& value) {
  std::string out;
  for (char c : value) {
    switch (c) {
      case '_':
      case '&':
      case '%':
      case '#':
      case '$':
        out.push_back('\\');
        out.push_back(c);
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

struct Row {
  std::string code;
  std::string label;
  int count = 0;
  int files = 0;
};

std::vector<Row> stat_rows(const SmellReport& report, SmellFamily family) {
  auto counts = report.count_by_code();
  auto files = report.files_by_code();
  std::vector<Row> rows;
  for (std::string_view code : smell_codes(family)) {
    Row row;
    row.code = std::string(code);
    row.label = std::string(smell_label(code));
    if (auto it = counts.find(row.code); it != counts.end()) {
      row.count = it->second;
    }
    if (auto it = files.find(row.code); it != files.end()) {
      row.files = it->second;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string emit_csv(const SmellReport& report) {
  std::string out = "path,line,smell_code,smell_label\n";
  for (const Smell& smell : report.findings) {
    out += csv_field(smell.span.path);
    out += ",";
    out += std::to_string(smell.span.start_line);
    out += ",";
    out += csv_field(smell.code);
    out += ",";
    out += csv_field(smell.label);
    out += "\n";
  }
  return out;
}

std::string emit_table(const SmellReport& report, TableFormat format,
                       SmellFamily family) {
  std::vector<Row> rows = stat_rows(report, family);
  if (format == TableFormat::latex) {
    std::string out = "\\begin{tabular}{llrr}\n\\hline\n";
    out += "Code & Smell & Count & Files \\\\\n\\hline\n";
    for (const Row& row : rows) {
      out += latex_escape(row.code) + " & " + latex_escape(row.label) + " & " +
             std::to_string(row.count) + " & " + std::to_string(row.files) +
             " \\\\\n";
    }
    out += "\\hline\n\\end{tabular}\n";
    return out;
  }

  const std::vector<std::string> headers = {"Code", "Smell", "Count", "Files"};
  std::vector<std::vector<std::string>> cells;
  for (const Row& row : rows) {
    cells.push_back({row.code, row.label, std::to_string(row.count),
                     std::to_string(row.files)});
  }
  std::vector<std::size_t> widths(headers.size());
  for (std::size_t i = 0; i < headers.size(); ++i) {
    widths[i] = headers[i].size();
    for (const auto& row : cells) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  const auto rule = [&widths]() {
    std::string out = "+";
    for (std::size_t width : widths) {
      out += std::string(width + 2, '-');
      out += "+";
    }
    out += "\n";
    return out;
  };
  const auto line = [&widths](const std::vector<std::string>& row) {
    std::string out = "|";
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += " " + row[i] + std::string(widths[i] - row[i].size(), ' ') + " |";
    }
    out += "\n";
    return out;
  };
  std::string out = rule();
  out += line(headers);
  out += rule();
  for (const auto& row : cells) out += line(row);
  out += rule();
  return out;
}

}  // namespace iaclint
