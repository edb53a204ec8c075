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

// Seeded generators for property tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "degga/bitstring.hpp"
#include "degga/circuit.hpp"
#include "support/reference.hpp"

namespace degga::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  double phase() {
    return std::uniform_real_distribution<double>(-std::numbers::pi,
                                                  std::numbers::pi)(rng_);
  }

  /// `count` distinct qubits out of n, in random order.
  std::vector<int> distinct_qubits(int n, int count) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    std::shuffle(all.begin(), all.end(), rng_);
    all.resize(static_cast<std::size_t>(count));
    return all;
  }

  Gate gate(int n, bool allow_ct = true) {
    while (true) {
      const auto kind = static_cast<GateKind>(uniform_int(0, 9));
      if (kind == GateKind::CT && !allow_ct) continue;
      const int max_controls = n - 1;
      switch (kind) {
        case GateKind::H:
          return Gate::h(uniform_int(0, n - 1));
        case GateKind::X:
          return Gate::x(uniform_int(0, n - 1));
        case GateKind::T:
          return Gate::t(uniform_int(0, n - 1));
        case GateKind::Tdg:
          return Gate::tdg(uniform_int(0, n - 1));
        case GateKind::PS:
          return Gate::ps(uniform_int(0, n - 1), phase());
        default:
          break;
      }
      if (max_controls < 1) continue;
      if ((kind == GateKind::MCPS || kind == GateKind::MCX) && max_controls < 2) {
        continue;
      }
      const int k = (kind == GateKind::MCPS || kind == GateKind::MCX)
                        ? uniform_int(2, std::min(max_controls, 5))
                        : 1;
      auto q = distinct_qubits(n, k + 1);
      const int t = q.back();
      q.pop_back();
      switch (kind) {
        case GateKind::CX:
          return Gate::cx(q[0], t);
        case GateKind::CPS:
          return Gate::cps(q[0], t, phase());
        case GateKind::CT:
          return Gate::ct(q[0], t);
        case GateKind::MCPS:
          return Gate::mcps(q, t, phase());
        default:
          return Gate::mcx(q, t);
      }
    }
  }

  Circuit circuit(int n, int gates, bool allow_ct = true) {
    Circuit c(n);
    for (int i = 0; i < gates; ++i) c.append(gate(n, allow_ct));
    return c;
  }

  /// Random normalized state.
  Vec state(int n) {
    std::normal_distribution<double> d;
    Vec v(std::uint64_t{1} << n);
    double norm = 0.0;
    for (auto& a : v) {
      a = {d(rng_), d(rng_)};
      norm += std::norm(a);
    }
    for (auto& a : v) a /= std::sqrt(norm);
    return v;
  }

  /// Nonempty proper subset of {0,1}^n with `count` members (count < 2^n).
  TargetSet target_set(int n, std::uint64_t count) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    if (count < 1 || count >= dim) {
      throw std::invalid_argument("target count out of range for width");
    }
    std::set<std::uint64_t> picked;
    std::uniform_int_distribution<std::uint64_t> d(0, dim - 1);
    while (picked.size() < count) picked.insert(d(rng_));
    std::vector<BitString> members;
    for (auto i : picked) members.emplace_back(n, i);
    return TargetSet(n, members);
  }

  /// Random size in [1, 2^n - 1], then a random set of that size.
  TargetSet target_set(int n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::uniform_int_distribution<std::uint64_t> d(1, dim - 1);
    return target_set(n, d(rng_));
  }

 private:
  std::mt19937_64 rng_;
};

/// Every nonempty proper subset of {0,1}^n (n <= 4).
inline std::vector<TargetSet> all_target_sets(int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<TargetSet> out;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << dim); ++mask) {
    std::vector<BitString> members;
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((mask >> i) & 1U) members.emplace_back(n, i);
    }
    out.emplace_back(n, members);
  }
  return out;
}

inline std::vector<std::uint64_t> indices_of(const TargetSet& t) {
  std::vector<std::uint64_t> v;
  for (const auto& m : t) v.push_back(m.index());
  return v;
}

}  // namespace degga::testing
