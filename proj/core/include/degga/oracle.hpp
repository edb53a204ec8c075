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

#include "degga/bitstring.hpp"
#include "degga/circuit.hpp"

namespace degga {

/**
 * Diagonal oracle I + (e^{i phi} - 1)|A><A| on n qubits.
 *
 * Every target is handled on its own: X on the zero bits, a phase gate with
 * controls 0..n-2 and target n-1, then the same X gates again. Targets are
 * emitted in ascending order and X gates are never merged across targets.
 */
Circuit phase_oracle(int n, const TargetSet& targets, double phi);

/// I + (e^{i phi} - 1)|0...0><0...0|: X^n, C^{n-1}PS(phi), X^n.
Circuit zero_phase_oracle(int n, double phi);

/// Sign-flip oracle, phase_oracle with phi = pi.
Circuit inversion_oracle(int n, const TargetSet& targets);

}  // namespace degga
