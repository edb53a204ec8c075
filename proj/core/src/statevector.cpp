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

#include "degga/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "degga/error.hpp"

namespace degga {

namespace {

void check_width(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("state width must be in 1.." +
                          std::to_string(kMaxQubits) + ", got " +
                          std::to_string(n));
  }
}

Amplitude phase_factor(const Gate& g) {
  switch (g.kind()) {
    case GateKind::T:
    case GateKind::CT:
      return std::polar(1.0, std::numbers::pi / 4);
    case GateKind::Tdg:
      return std::polar(1.0, -std::numbers::pi / 4);
    default:
      return std::polar(1.0, g.phase());
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_width(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) {
    throw ValidationError("basis index " + std::to_string(index) +
                          " out of range");
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  if (amplitudes.size() < 2 || !std::has_single_bit(amplitudes.size())) {
    throw ValidationError("amplitude count must be a power of two >= 2");
  }
  StateVector s(std::countr_zero(amplitudes.size()));
  s.amplitudes_ = std::move(amplitudes);
  return s;
}

double StateVector::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

void StateVector::apply(const Gate& gate) {
  if (gate.max_qubit() >= n_qubits_) {
    throw ValidationError("qubit " + std::to_string(gate.max_qubit()) +
                          " out of range for a " + std::to_string(n_qubits_) +
                          "-qubit state");
  }
  const auto bit_of = [this](int q) {
    return std::uint64_t{1} << (n_qubits_ - 1 - q);
  };
  const std::uint64_t tmask = bit_of(gate.target());
  std::uint64_t cmask = 0;
  for (int c : gate.controls()) cmask |= bit_of(c);
  const std::uint64_t dim = amplitudes_.size();
  Amplitude* amp = amplitudes_.data();

  switch (gate.kind()) {
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2;
      for (std::uint64_t base = 0; base < dim; base += 2 * tmask) {
        for (std::uint64_t i = base; i < base + tmask; ++i) {
          const Amplitude a = amp[i];
          const Amplitude b = amp[i | tmask];
          amp[i] = r * (a + b);
          amp[i | tmask] = r * (a - b);
        }
      }
      break;
    }
    case GateKind::X:
    case GateKind::CX:
    case GateKind::MCX: {
      for (std::uint64_t base = 0; base < dim; base += 2 * tmask) {
        for (std::uint64_t i = base; i < base + tmask; ++i) {
          if ((i & cmask) == cmask) std::swap(amp[i], amp[i | tmask]);
        }
      }
      break;
    }
    default: {
      // Diagonal kinds: multiply where target and all controls are 1.
      const Amplitude f = phase_factor(gate);
      const std::uint64_t mask = cmask | tmask;
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & mask) == mask) amp[i] *= f;
      }
      break;
    }
  }
}

void StateVector::apply(const Circuit& circuit) {
  if (circuit.n_qubits() != n_qubits_) {
    throw ValidationError("width mismatch: state has " +
                          std::to_string(n_qubits_) + " qubits, circuit " +
                          std::to_string(circuit.n_qubits()));
  }
  for (const auto& g : circuit.gates()) apply(g);
}

StateVector simulate(const Circuit& circuit) {
  StateVector s(circuit.n_qubits());
  s.apply(circuit);
  return s;
}

StateVector apply_gate(StateVector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

double success_probability(const StateVector& state, const TargetSet& targets) {
  if (targets.width() != state.n_qubits()) {
    throw ValidationError("width mismatch: state has " +
                          std::to_string(state.n_qubits()) +
                          " qubits, targets " + std::to_string(targets.width()));
  }
  double p = 0.0;
  for (const auto& t : targets) p += state.probability(t.index());
  return p;
}

SampleReport sample(const StateVector& state, std::uint64_t shots,
                    std::uint64_t seed) {
  if (shots < 1) throw ValidationError("shots must be at least 1");
  const auto amps = state.amplitudes();
  std::vector<double> cdf(amps.size());
  double running = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    running += std::norm(amps[i]);
    cdf[i] = running;
  }
  std::vector<std::uint64_t> counts(amps.size(), 0);
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u =
        static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
    // First entry with cdf > u; never a zero-probability index.
    auto idx = static_cast<std::size_t>(
        std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    ++counts[std::min(idx, cdf.size() - 1)];
  }
  SampleReport report;
  report.n_qubits = state.n_qubits();
  report.shots = shots;
  report.seed = seed;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) {
      report.histogram.emplace(BitString(state.n_qubits(), i), counts[i]);
    }
  }
  return report;
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ValidationError("width mismatch: " + std::to_string(a.n_qubits()) +
                          " vs " + std::to_string(b.n_qubits()));
  }
  const auto aa = a.amplitudes();
  const auto bb = b.amplitudes();
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < aa.size(); ++i) {
    if (std::abs(aa[i]) > std::abs(aa[pivot])) pivot = i;
  }
  Amplitude c{1.0, 0.0};
  if (std::abs(bb[pivot]) > 0.0 && std::abs(aa[pivot]) > 0.0) {
    c = aa[pivot] / bb[pivot];
    c /= std::abs(c);
  }
  for (std::size_t i = 0; i < aa.size(); ++i) {
    if (std::abs(aa[i] - c * bb[i]) > tol) return false;
  }
  return true;
}

}  // namespace degga
