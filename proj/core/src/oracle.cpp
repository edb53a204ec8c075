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

#include "degga/oracle.hpp"

#include <numbers>
#include <string>
#include <vector>

#include "degga/error.hpp"

namespace degga {

namespace {

std::vector<int> leading_qubits(int n) {
  std::vector<int> out;
  for (int q = 0; q + 1 < n; ++q) out.push_back(q);
  return out;
}

}  // namespace

Circuit phase_oracle(int n, const TargetSet& targets, double phi) {
  if (targets.width() != n) {
    throw ValidationError("target width " + std::to_string(targets.width()) +
                          " does not match register width " +
                          std::to_string(n));
  }
  Circuit c(n);
  const auto controls = leading_qubits(n);
  for (const auto& target : targets) {
    std::vector<int> zeros;
    for (int q = 0; q < n; ++q) {
      if (!target.bit(q)) zeros.push_back(q);
    }
    for (int q : zeros) c.append(Gate::x(q));
    c.append(Gate::controlled_phase(controls, n - 1, phi));
    for (int q : zeros) c.append(Gate::x(q));
  }
  return c;
}

Circuit zero_phase_oracle(int n, double phi) {
  Circuit c(n);
  for (int q = 0; q < n; ++q) c.append(Gate::x(q));
  c.append(Gate::controlled_phase(leading_qubits(n), n - 1, phi));
  for (int q = 0; q < n; ++q) c.append(Gate::x(q));
  return c;
}

Circuit inversion_oracle(int n, const TargetSet& targets) {
  return phase_oracle(n, targets, std::numbers::pi);
}

}  // namespace degga
