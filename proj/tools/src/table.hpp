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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nkcli {

enum class Format { Csv, JsonLines };

/// One output cell. Numbers keep their 17-digit rendering in both formats;
/// non-finite numbers become null in JSON lines.
struct Cell {
  enum class Kind { Number, NonFinite, Text, Bool, Empty };
  Kind kind = Kind::Empty;
  std::string text;

  static Cell number(double v);
  static Cell integer(long long v);
  static Cell str(std::string s);
  static Cell boolean(bool b);
  static Cell empty();
};

/// Writes a header once, then rows in the order given. CSV output has a
/// single header line; JSON lines output has one object per row.
class TableWriter {
 public:
  TableWriter(std::ostream& out, Format format, std::vector<std::string> columns);
  void row(const std::vector<Cell>& cells);

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
};

}  // namespace nkcli
