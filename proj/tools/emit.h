// Copyright 2026 The qspoof Authors
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

#ifndef QSPOOF_TOOLS_EMIT_H
#define QSPOOF_TOOLS_EMIT_H

#include <stdexcept>
#include <string>

#include "sweep.h"

namespace qspoof::tools {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Header `x_name,series...`, one row per x, %.17g, LF endings.
std::string to_csv(const SweepTable &table);

/// Self-contained SVG line plot: one <polyline> per series, labelled axes,
/// log10 x axis when table.log_x.
std::string to_svg(const SweepTable &table);

/// Writes the table to `path`. Throws IoError naming the path on failure.
void emit(const SweepTable &table, Format format, const std::string &path);

}  // namespace qspoof::tools

#endif  // QSPOOF_TOOLS_EMIT_H
