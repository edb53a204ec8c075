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

#include "degga/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "degga/error.hpp"
#include "degga/search.hpp"

namespace degga {

namespace {

constexpr double kPi = std::numbers::pi;

long long floor_ll(double x) { return static_cast<long long>(std::floor(x)); }

double space(int n) { return std::ldexp(1.0, n); }

std::string join_targets(const TargetSet& targets) {
  std::string s = "{";
  bool first = true;
  for (const auto& t : targets) {
    if (!first) s += ',';
    s += t.str();
    first = false;
  }
  return s + "}";
}

std::string join_sizes(const Partition& p) {
  std::string s;
  for (int size : p.sizes()) {
    if (!s.empty()) s += '+';
    s += std::to_string(size);
  }
  return s;
}

double reduction(double baseline, double candidate) {
  if (baseline <= 0.0) return 0.0;
  return 1.0 - candidate / baseline;
}

}  // namespace

SingleTargetDepths depth_formula_single_target(int n) {
  if (n < 1) throw ValidationError("n must be at least 1");
  SingleTargetDepths d;
  d.modified_grover = 9 + 8 * floor_ll(kPi / 4 * std::sqrt(space(n)) - 0.5);
  d.dega = 8 * (n % 2) + 9;
  return d;
}

long long depth_formula_multi_target(int n, std::uint64_t a) {
  if (n < 1) throw ValidationError("n must be at least 1");
  if (a < 1 || static_cast<double>(a) >= space(n)) {
    throw ValidationError("target count must satisfy 1 <= a < 2^n");
  }
  const long long per = 3 * static_cast<long long>(a);
  return (6 + per) +
         (5 + per) * floor_ll(kPi / 4 *
                                  std::sqrt(space(n) / static_cast<double>(a)) -
                              0.5);
}

long long depth_formula_degga(int n, const Partition& partition,
                              std::uint64_t a,
                              std::span<const std::uint64_t> node_counts) {
  partition.validate(n);
  if (node_counts.size() != static_cast<std::size_t>(partition.parts())) {
    throw ValidationError("need one target count per node");
  }
  long long inner = 0;
  double product = 1.0;
  for (std::size_t j = 0; j < node_counts.size(); ++j) {
    inner = std::max(inner, depth_formula_multi_target(partition.sizes()[j],
                                                       node_counts[j]));
    product *= static_cast<double>(node_counts[j]);
  }
  if (a < 1 || static_cast<double>(a) > product) {
    throw ValidationError("target count exceeds the product of node counts");
  }
  const double theta = std::asin(std::sqrt(static_cast<double>(a) / product));
  const long long j = floor_ll((kPi / 2 - theta) / (2 * theta));
  return (2 * j + 3) * inner + (j + 1) * (3 * static_cast<long long>(a) + 3);
}

ComparisonReport compare(const ComparisonRow& baseline,
                         std::span<const ComparisonRow> candidates) {
  ComparisonReport r;
  r.rows.push_back(baseline);
  r.rows.insert(r.rows.end(), candidates.begin(), candidates.end());
  const auto& last = r.rows.back();
  r.gate_reduction = reduction(static_cast<double>(baseline.after.total),
                               static_cast<double>(last.after.total));
  r.depth_reduction = reduction(baseline.after.depth, last.after.depth);
  return r;
}

ComparisonReport compare(const Circuit& baseline,
                         std::span<const Circuit> candidates,
                         const Basis& basis,
                         std::span<const std::string> labels) {
  if (!labels.empty() && labels.size() != candidates.size() + 1) {
    throw ValidationError("need one label per circuit, baseline first");
  }
  auto row = [&](const Circuit& c, std::size_t i) {
    if (c.n_qubits() != baseline.n_qubits()) {
      throw ValidationError("circuit widths differ: " +
                            std::to_string(baseline.n_qubits()) + " vs " +
                            std::to_string(c.n_qubits()));
    }
    ComparisonRow out;
    out.label = labels.empty()
                    ? (i == 0 ? "baseline" : "candidate " + std::to_string(i))
                    : labels[i];
    out.before = census(c);
    out.after = census(lower_circuit(c, basis));
    return out;
  };
  const ComparisonRow base = row(baseline, 0);
  std::vector<ComparisonRow> rows;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    rows.push_back(row(candidates[i], i + 1));
  }
  return compare(base, rows);
}

DepthDivergence long_depth_divergence(int n, const TargetSet& targets) {
  DepthDivergence d;
  d.instance = "long n=" + std::to_string(n) + " " + join_targets(targets);
  d.formula = "multi-target depth formula";
  d.formula_depth = depth_formula_multi_target(n, targets.size());
  d.measured_depth = depth(build_long(n, targets));
  return d;
}

DepthDivergence degga_depth_divergence(int n, const TargetSet& targets,
                                       const Partition& partition) {
  const DeggaPlan plan = plan_degga(n, targets, partition);
  std::vector<std::uint64_t> counts;
  for (const auto& node : plan.nodes) counts.push_back(node.targets.size());
  DepthDivergence d;
  d.instance = "degga n=" + std::to_string(n) + " p=" + join_sizes(partition) +
               " " + join_targets(targets);
  d.formula = "distributed depth formula";
  d.formula_depth =
      depth_formula_degga(n, partition, targets.size(), counts);
  d.measured_depth = depth(build_degga(plan));
  return d;
}

std::vector<DepthDivergence> reference_divergences() {
  const auto targets = TargetSet::parse({"000000", "111111"});
  return {long_depth_divergence(6, targets),
          degga_depth_divergence(6, targets, Partition({3, 3}))};
}

}  // namespace degga
