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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "degga/circuit.hpp"
#include "degga/distributed.hpp"
#include "degga/lowering.hpp"

namespace degga {

// Closed-form depth predictions. These evaluate the printed floor
// expressions in double precision and are deliberately independent of the
// iteration rule used by the circuit builders.

struct SingleTargetDepths {
  long long modified_grover = 0;  ///< 9 + 8 floor(pi/4 sqrt(2^n) - 1/2)
  long long dega = 0;             ///< 8 (n mod 2) + 9
};

SingleTargetDepths depth_formula_single_target(int n);

/// (6+3a) + (5+3a) floor(pi/4 sqrt(2^n/a) - 1/2).
long long depth_formula_multi_target(int n, std::uint64_t a);

/**
 * (2J'+3) max_j D_j + (J'+1)(3a+3) with D_j the multi-target formula on node
 * j and J' = floor((pi/2 - theta')/(2 theta')),
 * theta' = asin(sqrt(a / prod_j a_j)).
 */
long long depth_formula_degga(int n, const Partition& partition,
                              std::uint64_t a,
                              std::span<const std::uint64_t> node_counts);

struct ComparisonRow {
  std::string label;
  GateCensus before;
  GateCensus after;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;  ///< baseline first
  /// 1 - after(last candidate) / after(baseline), on gate totals and depths.
  double gate_reduction = 0.0;
  double depth_reduction = 0.0;
};

ComparisonReport compare(const ComparisonRow& baseline,
                         std::span<const ComparisonRow> candidates);

/// Lowers baseline and candidates into `basis` and compares them.
ComparisonReport compare(const Circuit& baseline,
                         std::span<const Circuit> candidates,
                         const Basis& basis = Basis::standard(),
                         std::span<const std::string> labels = {});

/// A closed-form depth next to the depth measured on the built circuit.
struct DepthDivergence {
  std::string instance;
  std::string formula;
  long long formula_depth = 0;
  int measured_depth = 0;
};

DepthDivergence long_depth_divergence(int n, const TargetSet& targets);
DepthDivergence degga_depth_divergence(int n, const TargetSet& targets,
                                       const Partition& partition);

/// Both rows for the two-target 6-qubit instance ({000000, 111111}):
/// exact search and the 3+3 distributed circuit.
std::vector<DepthDivergence> reference_divergences();

}  // namespace degga
