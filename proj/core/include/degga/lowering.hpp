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

#include <initializer_list>
#include <set>

#include "degga/circuit.hpp"

namespace degga {

/// Gate kinds a lowered circuit may contain.
class Basis {
 public:
  /// Throws ValidationError unless CX and a single-qubit phase kind
  /// (T, Tdg or PS) are present, or if a multi-controlled kind is listed.
  explicit Basis(std::set<GateKind> kinds);
  Basis(std::initializer_list<GateKind> kinds);

  /// {H, X, T, Tdg, PS, CX, CT, CPS}.
  static Basis standard();

  bool contains(GateKind kind) const { return kinds_.count(kind) != 0; }
  const std::set<GateKind>& kinds() const noexcept { return kinds_; }

 private:
  std::set<GateKind> kinds_;
};

/// Largest control count with a decomposition rule.
inline constexpr int kMaxLoweredControls = 5;

/**
 * One rewriting step for a gate outside the standard basis. The result may
 * still hold multi-controlled gates; lower_circuit() applies rules until
 * none remain. The returned circuit is as wide as the gate's highest qubit.
 *
 * Rules:
 *  - C^2PS(t): CPS(t/2) c2->t, CX c1->c2, CPS(-t/2) c2->t, CX c1->c2,
 *    CPS(t/2) c1->t.
 *  - C^3PS(t): Gray-code network of 7 CPS(+-t/4) and 6 CX.
 *  - C^kPS(t), k = 4, 5: CPS(t/2) ck->t, C^(k-1)X -> ck, CPS(-t/2) ck->t,
 *    C^(k-1)X -> ck, C^(k-1)PS(t/2) -> t.
 *  - C^2X: the 15-gate H/T/Tdg/CX Toffoli network.
 *  - C^kX, k >= 3: the Toffoli network with its two control roles replaced
 *    by the first and last k-1 controls. Six C^(k-1)X gates, one
 *    C^(k-2)T on the first k-1 controls (CT, or C^(k-2)PS(pi/4)) and eight
 *    single-qubit gates.
 *
 * Throws UnsupportedError for more than five controls and ValidationError
 * for kinds with no rule (H, X, T, Tdg, PS, CX).
 */
Circuit decompose_once(const Gate& gate);

/// Fully lowered two-control gate (MCPS or MCX). Throws ValidationError on
/// other arities.
Circuit decompose_c2(const Gate& gate);
Circuit decompose_c3(const Gate& gate);
Circuit decompose_c4(const Gate& gate);
Circuit decompose_c5ps(const Gate& gate);

/// Rewrites every gate outside `basis` until only basis kinds remain.
Circuit lower_circuit(const Circuit& circuit,
                      const Basis& basis = Basis::standard());

}  // namespace degga
