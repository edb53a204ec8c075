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

#include "degga/circuit.hpp"

#include <algorithm>
#include <string>

#include "degga/bitstring.hpp"
#include "degga/error.hpp"

namespace degga {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) {
    throw ValidationError("circuit needs at least one qubit");
  }
}

Circuit& Circuit::append(Gate gate) {
  if (gate.max_qubit() >= n_qubits_) {
    throw ValidationError("qubit " + std::to_string(gate.max_qubit()) +
                          " out of range for a " + std::to_string(n_qubits_) +
                          "-qubit circuit");
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw ValidationError("width mismatch: " + std::to_string(n_qubits_) +
                          " vs " + std::to_string(other.n_qubits_));
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit& Circuit::append_at(const Circuit& block, int offset) {
  if (offset < 0 || offset + block.n_qubits_ > n_qubits_) {
    throw ValidationError("block of width " + std::to_string(block.n_qubits_) +
                          " at offset " + std::to_string(offset) +
                          " does not fit in " + std::to_string(n_qubits_) +
                          " qubits");
  }
  gates_.reserve(gates_.size() + block.gates_.size());
  for (const auto& g : block.gates_) gates_.push_back(g.shifted(offset));
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(n_qubits_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(it->inverse());
  }
  return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.append(b);
  return out;
}

int depth(const Circuit& circuit) {
  std::vector<int> layer(static_cast<std::size_t>(circuit.n_qubits()), 0);
  int result = 0;
  for (const auto& g : circuit.gates()) {
    int l = layer[static_cast<std::size_t>(g.target())];
    for (int c : g.controls()) l = std::max(l, layer[static_cast<std::size_t>(c)]);
    ++l;
    layer[static_cast<std::size_t>(g.target())] = l;
    for (int c : g.controls()) layer[static_cast<std::size_t>(c)] = l;
    result = std::max(result, l);
  }
  return result;
}

std::size_t GateCensus::count(GateKind kind) const {
  auto it = by_kind.find(kind);
  return it == by_kind.end() ? 0 : it->second;
}

std::size_t GateCensus::count(GateKind kind, int controls) const {
  auto it = by_arity.find({kind, controls});
  return it == by_arity.end() ? 0 : it->second;
}

std::size_t GateCensus::single_qubit() const {
  std::size_t n = 0;
  for (const auto& [kind, c] : by_kind) {
    if (is_single_qubit(kind)) n += c;
  }
  return n;
}

std::size_t GateCensus::two_qubit() const {
  return count(GateKind::CX) + count(GateKind::CPS) + count(GateKind::CT);
}

GateCensus census(const Circuit& circuit) {
  GateCensus c;
  c.total = circuit.size();
  for (const auto& g : circuit.gates()) {
    ++c.by_kind[g.kind()];
    ++c.by_arity[{g.kind(), g.num_controls()}];
  }
  c.depth = depth(circuit);
  return c;
}

}  // namespace degga
