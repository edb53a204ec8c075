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

#include <array>
#include <cstdint>

#include "degga/bitstring.hpp"
#include "degga/circuit.hpp"

namespace degga {

/// Iteration count floor((pi/4) * sqrt(2^n / a)) of the textbook search.
int grover_iterations(int n, std::uint64_t a);

/// sin^2((2k+1) * asin(sqrt(a/2^n))) for k = grover_iterations(n, a).
double grover_success_probability(int n, std::uint64_t a);

/// H^n followed by k rounds of [sign oracle, H^n, zero reflection, H^n].
Circuit build_grover(int n, const TargetSet& targets);

/// Parameters of the exact (phase-matched) search over N items with a marked.
struct LongParams {
  std::uint64_t N = 0;
  std::uint64_t a = 0;
  double theta = 0.0;
  int J = 0;  ///< the circuit applies J+1 iterations
  double phi = 0.0;

  int iterations() const noexcept { return J + 1; }
};

/// Smallest J >= 0 with sin(pi/(4J+6)) <= sin(theta).
int minimal_phase_matched_j(double theta);

/// Throws ValidationError unless 1 <= a < N.
LongParams long_params(std::uint64_t N, std::uint64_t a);

/// H^n followed by J+1 rounds of [R_f(phi), H^n, R_0(phi), H^n].
Circuit build_long(int n, const TargetSet& targets);

/// One exact-search iteration R_f(phi), H^n, R_0(phi), H^n.
Circuit long_iteration(int n, const TargetSet& targets, double phi);

/// Rotation-picture view of one exact-search iteration on span{|A>,|B>}.
struct LongRotation {
  double alpha = 0.0;  ///< rotation angle per iteration
  double beta = 0.0;   ///< alpha / 4
  std::array<double, 3> axis{};
  double omega = 0.0;           ///< (J+1) * alpha
  double omega_required = 0.0;  ///< 2 * acos(sin(phi/2) sin(theta))
  /// sin(pi/(4J+6)) - sin(phi/2) sin(theta); zero when phases match.
  double phase_matching_residual = 0.0;
};

LongRotation long_rotation(const LongParams& params);

}  // namespace degga
