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

#include "degga/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "degga/error.hpp"
#include "degga/oracle.hpp"

namespace degga {

namespace {

constexpr double kPi = std::numbers::pi;

void check_count(std::uint64_t N, std::uint64_t a) {
  if (a < 1 || a >= N) {
    throw ValidationError("target count " + std::to_string(a) +
                          " must satisfy 1 <= a < " + std::to_string(N));
  }
}

std::uint64_t space_size(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("register width must be in 1.." +
                          std::to_string(kMaxQubits));
  }
  return std::uint64_t{1} << n;
}

void hadamard_layer(Circuit& c) {
  for (int q = 0; q < c.n_qubits(); ++q) c.append(Gate::h(q));
}

}  // namespace

int grover_iterations(int n, std::uint64_t a) {
  const auto N = space_size(n);
  check_count(N, a);
  return static_cast<int>(
      std::floor(kPi / 4 * std::sqrt(static_cast<double>(N) / a)));
}

double grover_success_probability(int n, std::uint64_t a) {
  const int k = grover_iterations(n, a);
  const double theta =
      std::asin(std::sqrt(static_cast<double>(a) / space_size(n)));
  const double s = std::sin((2 * k + 1) * theta);
  return s * s;
}

Circuit build_grover(int n, const TargetSet& targets) {
  targets.require_proper();
  const int k = grover_iterations(n, targets.size());
  const Circuit oracle = inversion_oracle(n, targets);
  const Circuit reflect = zero_phase_oracle(n, kPi);
  Circuit c(n);
  hadamard_layer(c);
  for (int i = 0; i < k; ++i) {
    c.append(oracle);
    hadamard_layer(c);
    c.append(reflect);
    hadamard_layer(c);
  }
  return c;
}

int minimal_phase_matched_j(double theta) {
  if (!(theta > 0.0 && theta <= kPi / 2)) {
    throw ValidationError("theta must lie in (0, pi/2]");
  }
  const double s = std::sin(theta);
  int j = 0;
  while (std::sin(kPi / (4 * j + 6)) > s + 1e-15) ++j;
  return j;
}

LongParams long_params(std::uint64_t N, std::uint64_t a) {
  check_count(N, a);
  LongParams p;
  p.N = N;
  p.a = a;
  p.theta = std::asin(std::sqrt(static_cast<double>(a) / static_cast<double>(N)));
  p.J = minimal_phase_matched_j(p.theta);
  const double ratio = std::sin(kPi / (4 * p.J + 6)) / std::sin(p.theta);
  p.phi = 2 * std::asin(std::min(1.0, ratio));
  return p;
}

Circuit long_iteration(int n, const TargetSet& targets, double phi) {
  Circuit c = phase_oracle(n, targets, phi);
  hadamard_layer(c);
  c.append(zero_phase_oracle(n, phi));
  hadamard_layer(c);
  return c;
}

Circuit build_long(int n, const TargetSet& targets) {
  targets.require_proper();
  const auto params = long_params(space_size(n), targets.size());
  const Circuit step = long_iteration(n, targets, params.phi);
  Circuit c(n);
  hadamard_layer(c);
  for (int i = 0; i < params.iterations(); ++i) c.append(step);
  return c;
}

LongRotation long_rotation(const LongParams& params) {
  LongRotation r;
  const double half_phi = params.phi / 2;
  const double projected = std::sin(half_phi) * std::sin(params.theta);
  r.beta = std::asin(projected);
  r.alpha = 4 * r.beta;
  const double scale = std::cos(params.theta) / std::cos(r.beta);
  r.axis = {scale * std::cos(half_phi), scale * std::sin(half_phi),
            scale * std::cos(half_phi) * std::tan(params.theta)};
  r.omega = (params.J + 1) * r.alpha;
  r.omega_required = 2 * std::acos(projected);
  r.phase_matching_residual = std::sin(kPi / (4 * params.J + 6)) - projected;
  return r;
}

}  // namespace degga
