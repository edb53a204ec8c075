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

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "degga/gate.hpp"

namespace degga {

/// An ordered gate list over a fixed number of qubits.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  /// Throws ValidationError if a qubit index is out of range.
  Circuit& append(Gate gate);
  /// Appends every gate of an equal-width circuit.
  Circuit& append(const Circuit& other);
  /// Appends a narrower circuit with its qubit 0 mapped to `offset`.
  Circuit& append_at(const Circuit& block, int offset);

  /// Reversed gate order with each gate inverted.
  Circuit inverse() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
};

/// Gates of `a` followed by gates of `b`. Widths must match.
Circuit concat(const Circuit& a, const Circuit& b);

/**
 * ASAP layer count: each gate lands one layer after the latest layer already
 * occupied on any of its wires. An empty circuit has depth 0.
 */
int depth(const Circuit& circuit);

/// Gate counts per kind and per (kind, control count), plus ASAP depth.
struct GateCensus {
  std::size_t total = 0;
  std::map<GateKind, std::size_t> by_kind;
  std::map<std::pair<GateKind, int>, std::size_t> by_arity;
  int depth = 0;

  std::size_t count(GateKind kind) const;
  std::size_t count(GateKind kind, int controls) const;
  /// Gates acting on one qubit (H, X, T, Tdg, PS).
  std::size_t single_qubit() const;
  /// Gates acting on exactly two qubits (CX, CPS, CT).
  std::size_t two_qubit() const;
};

GateCensus census(const Circuit& circuit);

}  // namespace degga
