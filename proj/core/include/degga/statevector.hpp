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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "degga/bitstring.hpp"
#include "degga/circuit.hpp"

namespace degga {

using Amplitude = std::complex<double>;

/**
 * Dense 2^n amplitude vector. Amplitude i belongs to the basis state whose
 * big-endian bit string has index i, i.e. qubit q is bit (n-1-q) of i.
 */
class StateVector {
 public:
  /// |0...0> on `n_qubits` qubits. Throws ValidationError above kMaxQubits.
  explicit StateVector(int n_qubits);

  static StateVector basis(int n_qubits, std::uint64_t index);
  /// Takes ownership of `amplitudes`; size must be a power of two.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  const Amplitude& operator[](std::uint64_t i) const { return amplitudes_[i]; }
  double probability(std::uint64_t i) const { return std::norm(amplitudes_[i]); }
  double norm_squared() const noexcept;

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

 private:
  int n_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// The circuit applied to |0...0>.
StateVector simulate(const Circuit& circuit);

/// Applies `gate` to a copy of `state`.
StateVector apply_gate(StateVector state, const Gate& gate);

/// Total probability of the marked basis states.
double success_probability(const StateVector& state, const TargetSet& targets);

struct SampleReport {
  int n_qubits = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<BitString, std::uint64_t> histogram;

  friend bool operator==(const SampleReport&, const SampleReport&) = default;
};

/**
 * Draws `shots` i.i.d. outcomes from |amplitude|^2 by inverse-CDF lookup.
 *
 * The generator is std::mt19937_64 seeded with `seed`; each draw maps one
 * 64-bit output to a double in [0,1) via its top 53 bits. Both are fixed by
 * the C++ standard, so reports are reproducible across platforms.
 */
SampleReport sample(const StateVector& state, std::uint64_t shots,
                    std::uint64_t seed);

/**
 * True when a = c*b for a unit scalar c, to within `tol` per amplitude.
 * c is taken from the largest-magnitude amplitude of a.
 */
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol);

}  // namespace degga
