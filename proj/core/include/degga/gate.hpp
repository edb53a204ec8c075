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

namespace degga {

/**
 * Gate families of the circuit IR.
 *
 * CPS/CT/CX carry exactly one control; MCPS/MCX carry two or more. CT is the
 * controlled pi/8 gate: it acts like CPS(pi/4) but is tracked as its own kind.
 */
enum class GateKind : std::uint8_t { H, X, T, Tdg, PS, CX, CPS, CT, MCPS, MCX };

inline constexpr GateKind kAllGateKinds[] = {
    GateKind::H,  GateKind::X,   GateKind::T,  GateKind::Tdg,  GateKind::PS,
    GateKind::CX, GateKind::CPS, GateKind::CT, GateKind::MCPS, GateKind::MCX};

std::string_view kind_name(GateKind kind) noexcept;
std::optional<GateKind> parse_kind(std::string_view name) noexcept;

bool has_phase(GateKind kind) noexcept;
bool is_single_qubit(GateKind kind) noexcept;
/// True for kinds whose action is diagonal in the computational basis.
bool is_diagonal(GateKind kind) noexcept;

class Gate {
 public:
  static Gate h(int q);
  static Gate x(int q);
  static Gate t(int q);
  static Gate tdg(int q);
  static Gate ps(int q, double phase);
  static Gate cx(int control, int target);
  static Gate cps(int control, int target, double phase);
  static Gate ct(int control, int target);
  static Gate mcps(std::vector<int> controls, int target, double phase);
  static Gate mcx(std::vector<int> controls, int target);

  /// Phase gate with any number of controls: PS, CPS or MCPS.
  static Gate controlled_phase(std::vector<int> controls, int target,
                               double phase);
  /// X with any number of controls: X, CX or MCX.
  static Gate controlled_x(std::vector<int> controls, int target);

  /// Generic constructor used by the parser. Validates arity, distinctness
  /// and phase presence; throws ValidationError.
  static Gate make(GateKind kind, int target, std::vector<int> controls,
                   double phase = 0.0);

  GateKind kind() const noexcept { return kind_; }
  int target() const noexcept { return target_; }
  /// Sorted ascending.
  const std::vector<int>& controls() const noexcept { return controls_; }
  int num_controls() const noexcept { return static_cast<int>(controls_.size()); }
  /// Zero for kinds without a stored phase.
  double phase() const noexcept { return phase_; }
  /// Highest qubit index touched.
  int max_qubit() const noexcept;
  /// Target followed by controls.
  std::vector<int> qubits() const;

  Gate inverse() const;
  /// Same gate with every qubit index shifted by `offset`.
  Gate shifted(int offset) const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, int target, std::vector<int> controls, double phase);

  GateKind kind_;
  int target_;
  std::vector<int> controls_;
  double phase_;
};

}  // namespace degga
