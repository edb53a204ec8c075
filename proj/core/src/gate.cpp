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

#include "degga/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "degga/error.hpp"

namespace degga {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  int min_controls;
  int max_controls;  // -1: unbounded
  bool phase;
};

constexpr KindInfo kKinds[] = {
    {GateKind::H, "H", 0, 0, false},      {GateKind::X, "X", 0, 0, false},
    {GateKind::T, "T", 0, 0, false},      {GateKind::Tdg, "Tdg", 0, 0, false},
    {GateKind::PS, "PS", 0, 0, true},     {GateKind::CX, "CX", 1, 1, false},
    {GateKind::CPS, "CPS", 1, 1, true},   {GateKind::CT, "CT", 1, 1, false},
    {GateKind::MCPS, "MCPS", 2, -1, true}, {GateKind::MCX, "MCX", 2, -1, false},
};

const KindInfo& info(GateKind kind) {
  return kKinds[static_cast<std::size_t>(kind)];
}

}  // namespace

std::string_view kind_name(GateKind kind) noexcept { return info(kind).name; }

std::optional<GateKind> parse_kind(std::string_view name) noexcept {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

bool has_phase(GateKind kind) noexcept { return info(kind).phase; }

bool is_single_qubit(GateKind kind) noexcept {
  return info(kind).max_controls == 0;
}

bool is_diagonal(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::PS:
    case GateKind::CPS:
    case GateKind::CT:
    case GateKind::MCPS:
      return true;
    default:
      return false;
  }
}

Gate::Gate(GateKind kind, int target, std::vector<int> controls, double phase)
    : kind_(kind), target_(target), controls_(std::move(controls)),
      phase_(phase) {}

Gate Gate::make(GateKind kind, int target, std::vector<int> controls,
                double phase) {
  const auto& k = info(kind);
  const int nc = static_cast<int>(controls.size());
  if (nc < k.min_controls || (k.max_controls >= 0 && nc > k.max_controls)) {
    throw ValidationError(std::string(k.name) + " cannot take " +
                          std::to_string(nc) + " control(s)");
  }
  if (target < 0) throw ValidationError("negative qubit index");
  std::sort(controls.begin(), controls.end());
  for (std::size_t i = 0; i < controls.size(); ++i) {
    if (controls[i] < 0) throw ValidationError("negative qubit index");
    if (controls[i] == target || (i > 0 && controls[i] == controls[i - 1])) {
      throw ValidationError("duplicate qubit " + std::to_string(controls[i]) +
                            " in " + std::string(k.name) + " gate");
    }
  }
  if (!k.phase) {
    phase = 0.0;
  } else if (!std::isfinite(phase)) {
    throw ValidationError("phase must be finite");
  }
  return Gate(kind, target, std::move(controls), phase);
}

Gate Gate::h(int q) { return make(GateKind::H, q, {}); }
Gate Gate::x(int q) { return make(GateKind::X, q, {}); }
Gate Gate::t(int q) { return make(GateKind::T, q, {}); }
Gate Gate::tdg(int q) { return make(GateKind::Tdg, q, {}); }
Gate Gate::ps(int q, double phase) { return make(GateKind::PS, q, {}, phase); }
Gate Gate::cx(int control, int target) {
  return make(GateKind::CX, target, {control});
}
Gate Gate::cps(int control, int target, double phase) {
  return make(GateKind::CPS, target, {control}, phase);
}
Gate Gate::ct(int control, int target) {
  return make(GateKind::CT, target, {control});
}
Gate Gate::mcps(std::vector<int> controls, int target, double phase) {
  return make(GateKind::MCPS, target, std::move(controls), phase);
}
Gate Gate::mcx(std::vector<int> controls, int target) {
  return make(GateKind::MCX, target, std::move(controls));
}

Gate Gate::controlled_phase(std::vector<int> controls, int target,
                            double phase) {
  switch (controls.size()) {
    case 0:
      return ps(target, phase);
    case 1:
      return cps(controls.front(), target, phase);
    default:
      return mcps(std::move(controls), target, phase);
  }
}

Gate Gate::controlled_x(std::vector<int> controls, int target) {
  switch (controls.size()) {
    case 0:
      return x(target);
    case 1:
      return cx(controls.front(), target);
    default:
      return mcx(std::move(controls), target);
  }
}

int Gate::max_qubit() const noexcept {
  return controls_.empty() ? target_ : std::max(target_, controls_.back());
}

std::vector<int> Gate::qubits() const {
  std::vector<int> out;
  out.reserve(controls_.size() + 1);
  out.push_back(target_);
  out.insert(out.end(), controls_.begin(), controls_.end());
  return out;
}

Gate Gate::inverse() const {
  switch (kind_) {
    case GateKind::T:
      return Gate(GateKind::Tdg, target_, controls_, 0.0);
    case GateKind::Tdg:
      return Gate(GateKind::T, target_, controls_, 0.0);
    case GateKind::CT:
      // CT^dagger is CPS(-pi/4); there is no CTdg kind.
      return Gate(GateKind::CPS, target_, controls_, -std::numbers::pi / 4);
    case GateKind::PS:
    case GateKind::CPS:
    case GateKind::MCPS:
      return Gate(kind_, target_, controls_, -phase_);
    default:
      return *this;
  }
}

Gate Gate::shifted(int offset) const {
  std::vector<int> controls = controls_;
  for (int& c : controls) c += offset;
  return Gate(kind_, target_ + offset, std::move(controls), phase_);
}

}  // namespace degga
