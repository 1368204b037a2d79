// Copyright 2026 The native_kernels Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "table.hpp"

#include <cmath>
#include <stdexcept>

#include "nk/format.hpp"

namespace nkcli {

Cell Cell::number(double v) { return {std::isfinite(v) ? Kind::Number : Kind::NonFinite, nk::format_double(v)}; }
Cell Cell::integer(long long v) { return {Kind::Number, std::to_string(v)}; }
Cell Cell::str(std::string s) { return {Kind::Text, std::move(s)}; }
Cell Cell::boolean(bool b) { return {Kind::Bool, b ? "true" : "false"}; }
Cell Cell::empty() { return {}; }

namespace {

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

TableWriter::TableWriter(std::ostream& out, Format format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {
  if (format_ == Format::Csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
    out_ << '\n';
  }
}

void TableWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_.size()) throw std::logic_error("table row width mismatch");
  if (format_ == Format::Csv) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i].text;
    out_ << '\n';
    return;
  }
  out_ << '{';
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out_ << (i ? "," : "") << json_string(columns_[i]) << ':';
    const Cell& c = cells[i];
    switch (c.kind) {
      case Cell::Kind::Number:
      case Cell::Kind::Bool: out_ << c.text; break;
      case Cell::Kind::Text: out_ << json_string(c.text); break;
      case Cell::Kind::NonFinite:
      case Cell::Kind::Empty: out_ << "null"; break;
    }
  }
  out_ << "}\n";
}

}  // namespace nkcli
