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
#include <optional>
#include <string_view>
#include <vector>

#include "degga/bitstring.hpp"
#include "degga/circuit.hpp"
#include "degga/search.hpp"

namespace degga {

/// Split of an n-qubit register into t >= 2 contiguous blocks.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> sizes);

  /// Comma-separated block sizes, e.g. "3,3". Throws ParseError.
  static Partition parse(std::string_view text);

  const std::vector<int>& sizes() const noexcept { return sizes_; }
  int parts() const noexcept { return static_cast<int>(sizes_.size()); }
  int total() const noexcept;
  int offset(int block) const;

  /// Throws ValidationError unless 2 <= t <= n and sizes sum to n.
  void validate(int n) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> sizes_;
};

/// Every ordered split of n into 2..n positive parts.
std::vector<Partition> all_partitions(int n);

struct NodePlan {
  int index = 0;
  int offset = 0;
  int width = 0;
  TargetSet targets;
  /// Empty when every block string is marked; the node then only needs H.
  std::optional<LongParams> params;
};

struct DeggaPlan {
  int n = 0;
  Partition partition;
  TargetSet targets;
  std::vector<NodePlan> nodes;
  /// prod_j a_j, the size of the node-target product space.
  std::uint64_t tuple_count = 0;
  /// Empty when a == tuple_count: the node stage alone is already exact.
  std::optional<LongParams> global;
};

/// Distinct block-j substrings of the targets (the marked set of g_j).
TargetSet project_targets(const TargetSet& targets, const Partition& partition,
                          int block);

DeggaPlan plan_degga(int n, const TargetSet& targets,
                     const Partition& partition);

/// Product of the per-node exact searches, each on its own wire range.
Circuit build_node_stage(const DeggaPlan& plan);

/// Qubits used by the cross-node oracle, or empty when the rewrite does not
/// apply.
std::optional<std::vector<int>> representative_qubits(const DeggaPlan& plan);

/**
 * Replacement for the global n-qubit oracle acting only on one qubit per
 * node. Valid on the span reached by the node stage.
 */
std::optional<Circuit> optimize_cross_node_oracle(const DeggaPlan& plan);

/// How build_degga treats the cross-node oracle rewrite.
enum class OracleMode {
  kFull,         ///< always use the n-qubit oracle
  kCrossNode,    ///< require the rewrite; throw UnsupportedError otherwise
  kPreferCross,  ///< use the rewrite when it applies
};

/**
 * Full distributed exact-search circuit. When the rewrite is used, the result
 * is checked by simulation against the plain circuit and rejected
 * (UnsupportedError, or a silent fallback for kPreferCross) on mismatch.
 */
Circuit build_degga(const DeggaPlan& plan, OracleMode mode = OracleMode::kFull);

/// Convenience overload: `optimize` selects kCrossNode.
Circuit build_degga(const DeggaPlan& plan, bool optimize);

}  // namespace degga
