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

#include "degga/lowering.hpp"

#include <numbers>
#include <string>
#include <vector>

#include "degga/error.hpp"

namespace degga {

namespace {

constexpr double kPi = std::numbers::pi;

using Gates = std::vector<Gate>;

std::vector<int> drop_last(const std::vector<int>& v) {
  return {v.begin(), v.end() - 1};
}

std::vector<int> drop_first(const std::vector<int>& v) {
  return {v.begin() + 1, v.end()};
}

void toffoli(int c1, int c2, int t, Gates& out) {
  out.insert(out.end(), {Gate::h(t),     Gate::cx(c1, t), Gate::tdg(t),
                         Gate::cx(c2, t), Gate::t(t),      Gate::cx(c1, t),
                         Gate::tdg(t),   Gate::cx(c2, t), Gate::t(c2),
                         Gate::t(t),     Gate::h(t),      Gate::cx(c1, c2),
                         Gate::t(c1),    Gate::tdg(c2),   Gate::cx(c1, c2)});
}

// pi/4 phase on the all-ones state of `qubits` (T for one qubit).
Gate t_phase_on(const std::vector<int>& qubits) {
  if (qubits.size() == 1) return Gate::t(qubits.front());
  if (qubits.size() == 2) return Gate::ct(qubits[0], qubits[1]);
  return Gate::mcps(drop_last(qubits), qubits.back(), kPi / 4);
}

// Toffoli network with control roles a = first k-1 controls and
// b = last k-1 controls. The target section leaves a relative phase of
// -i on a AND b, which the trailing controlled-S on (a, last control)
// cancels.
void multi_controlled_x(const std::vector<int>& controls, int t, Gates& out) {
  const auto a = drop_last(controls);
  const auto b = drop_first(controls);
  const int s = controls.back();
  out.insert(out.end(),
             {Gate::h(t), Gate::controlled_x(b, t), Gate::tdg(t),
              Gate::controlled_x(a, t), Gate::t(t), Gate::controlled_x(b, t),
              Gate::tdg(t), Gate::controlled_x(a, t), Gate::t(t), Gate::h(t),
              Gate::controlled_x(a, s), Gate::tdg(s), Gate::controlled_x(a, s),
              t_phase_on(a), Gate::t(s)});
}

void two_controlled_phase(int c1, int c2, int t, double theta, Gates& out) {
  out.insert(out.end(), {Gate::cps(c2, t, theta / 2), Gate::cx(c1, c2),
                         Gate::cps(c2, t, -theta / 2), Gate::cx(c1, c2),
                         Gate::cps(c1, t, theta / 2)});
}

// Gray-code walk over the nonempty control subsets; odd-size subsets get
// +theta/4, even-size ones -theta/4.
void three_controlled_phase(int c1, int c2, int c3, int t, double theta,
                            Gates& out) {
  const double k = theta / 4;
  const int g1 = c3;
  const int g2 = c1;
  const int g3 = c2;
  out.insert(out.end(),
             {Gate::cps(g1, t, k), Gate::cx(g1, g2), Gate::cps(g2, t, -k),
              Gate::cx(g1, g2), Gate::cps(g2, t, k), Gate::cx(g2, g3),
              Gate::cps(g3, t, -k), Gate::cx(g1, g3), Gate::cps(g3, t, k),
              Gate::cx(g2, g3), Gate::cps(g3, t, -k), Gate::cx(g1, g3),
              Gate::cps(g3, t, k)});
}

Gates rewrite(const Gate& g) {
  const auto& c = g.controls();
  const int t = g.target();
  const int k = g.num_controls();
  Gates out;
  switch (g.kind()) {
    case GateKind::MCPS: {
      if (k > kMaxLoweredControls) break;
      const double theta = g.phase();
      if (k == 2) {
        two_controlled_phase(c[0], c[1], t, theta, out);
      } else if (k == 3) {
        three_controlled_phase(c[0], c[1], c[2], t, theta, out);
      } else {
        const int last = c.back();
        const auto rest = drop_last(c);
        out.insert(out.end(),
                   {Gate::cps(last, t, theta / 2), Gate::mcx(rest, last),
                    Gate::cps(last, t, -theta / 2), Gate::mcx(rest, last),
                    Gate::mcps(rest, t, theta / 2)});
      }
      return out;
    }
    case GateKind::MCX:
      if (k > kMaxLoweredControls) break;
      if (k == 2) {
        toffoli(c[0], c[1], t, out);
      } else {
        multi_controlled_x(c, t, out);
      }
      return out;
    default:
      throw ValidationError(std::string(kind_name(g.kind())) +
                            " has no decomposition rule");
  }
  throw UnsupportedError("no decomposition rule for " +
                         std::string(kind_name(g.kind())) + " with " +
                         std::to_string(k) + " controls (at most " +
                         std::to_string(kMaxLoweredControls) + ")");
}

// Rules towards reduced bases; only used when the kind is not allowed.
Gates rewrite_for(const Gate& g, const Basis& basis) {
  switch (g.kind()) {
    case GateKind::T:
      if (basis.contains(GateKind::PS)) return {Gate::ps(g.target(), kPi / 4)};
      break;
    case GateKind::Tdg:
      if (basis.contains(GateKind::PS)) return {Gate::ps(g.target(), -kPi / 4)};
      break;
    case GateKind::CT:
      return {Gate::cps(g.controls()[0], g.target(), kPi / 4)};
    case GateKind::CPS: {
      const int c = g.controls()[0];
      const int t = g.target();
      const double half = g.phase() / 2;
      return {Gate::ps(c, half), Gate::cx(c, t), Gate::ps(t, -half),
              Gate::cx(c, t), Gate::ps(t, half)};
    }
    case GateKind::MCPS:
    case GateKind::MCX:
      return rewrite(g);
    default:
      break;
  }
  throw ValidationError(std::string(kind_name(g.kind())) +
                        " is outside the basis and has no rewrite into it");
}

void lower_into(const Gate& g, const Basis& basis, Gates& out) {
  if (basis.contains(g.kind())) {
    out.push_back(g);
    return;
  }
  for (const auto& sub : rewrite_for(g, basis)) lower_into(sub, basis, out);
}

Circuit lowered_gate(const Gate& g, int controls) {
  if (g.num_controls() != controls ||
      (g.kind() != GateKind::MCPS && g.kind() != GateKind::MCX)) {
    throw ValidationError("expected a " + std::to_string(controls) +
                          "-control MCPS or MCX gate");
  }
  Circuit c(g.max_qubit() + 1);
  c.append(g);
  return lower_circuit(c);
}

}  // namespace

Basis::Basis(std::set<GateKind> kinds) : kinds_(std::move(kinds)) {
  if (!contains(GateKind::CX)) throw ValidationError("basis must contain CX");
  if (!contains(GateKind::T) && !contains(GateKind::Tdg) &&
      !contains(GateKind::PS)) {
    throw ValidationError("basis must contain a single-qubit phase gate");
  }
  if (contains(GateKind::MCPS) || contains(GateKind::MCX)) {
    throw ValidationError("basis may not contain multi-controlled kinds");
  }
}

Basis::Basis(std::initializer_list<GateKind> kinds)
    : Basis(std::set<GateKind>(kinds)) {}

Basis Basis::standard() {
  return Basis{GateKind::H,  GateKind::X,   GateKind::T,  GateKind::Tdg,
               GateKind::PS, GateKind::CX,  GateKind::CT, GateKind::CPS};
}

Circuit decompose_once(const Gate& gate) {
  Circuit c(gate.max_qubit() + 1);
  for (auto& g : rewrite(gate)) c.append(std::move(g));
  return c;
}

Circuit decompose_c2(const Gate& gate) { return lowered_gate(gate, 2); }
Circuit decompose_c3(const Gate& gate) { return lowered_gate(gate, 3); }
Circuit decompose_c4(const Gate& gate) { return lowered_gate(gate, 4); }

Circuit decompose_c5ps(const Gate& gate) {
  if (gate.kind() != GateKind::MCPS) {
    throw ValidationError("expected a 5-control MCPS gate");
  }
  return lowered_gate(gate, 5);
}

Circuit lower_circuit(const Circuit& circuit, const Basis& basis) {
  Gates out;
  out.reserve(circuit.size());
  for (const auto& g : circuit.gates()) lower_into(g, basis, out);
  Circuit c(circuit.n_qubits());
  for (auto& g : out) c.append(std::move(g));
  return c;
}

}  // namespace degga
