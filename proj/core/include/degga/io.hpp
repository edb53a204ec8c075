// Copyright 2026 The degga Authors
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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "degga/analysis.hpp"
#include "degga/circuit.hpp"
#include "degga/statevector.hpp"

namespace degga {

// Circuit text format
//
//   qubits <n>
//   <KIND> [<phase>] <target> [<control> ...]
//
// One gate per line; phases use 17 significant digits so every double
// survives a round trip. Blank lines and lines starting with '#' are
// ignored on input.

std::string format_phase(double phase);
std::string serialize_circuit(const Circuit& circuit);
/// Throws ParseError or ValidationError.
Circuit parse_circuit(std::string_view text);

// Sample results format
//
//   qubits <n>
//   shots <count>
//   seed <seed>
//   <bitstring> <count>      (ascending bitstring order)

std::string serialize_results(const SampleReport& report);
SampleReport parse_results(std::string_view text);

std::string results_csv(const SampleReport& report);
/// Bar chart of the histogram; presentation only.
std::string results_svg(const SampleReport& report);

/// Aligned table, one line per census entry.
std::string census_table(const GateCensus& census);

std::string comparison_table(const ComparisonReport& report);
std::string comparison_csv(const ComparisonReport& report);

std::string divergence_table(const std::vector<DepthDivergence>& rows);

/// Reads a whole file. Throws Error if it cannot be opened.
std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

}  // namespace degga
