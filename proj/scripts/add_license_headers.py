#!/usr/bin/env python3
# Copyright 2026 The native_kernels Authors
# SPDX-License-Identifier: Apache-2.0
"""Prepends the Apache-2.0 header to every C++ source that lacks it."""

import pathlib
import sys

HEADER = """\
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
"""

ROOTS = ("core", "tools", "tests", "benchmarks")


def main():
    repo = pathlib.Path(__file__).resolve().parent.parent
    changed = 0
    for root in ROOTS:
        for path in sorted((repo / root).rglob("*")):
            if path.suffix not in (".hpp", ".cpp") or not path.is_file():
                continue
            text = path.read_text()
            if text.startswith("// Copyright"):
                continue
            path.write_text(HEADER + "\n" + text)
            changed += 1
    print(f"added headers to {changed} files", file=sys.stderr)


if __name__ == "__main__":
    main()
