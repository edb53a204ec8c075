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

#include "degga/distributed.hpp"

#include <charconv>
#include <numeric>
#include <string>

#include "degga/error.hpp"
#include "degga/oracle.hpp"
#include "degga/statevector.hpp"

namespace degga {

Partition::Partition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw ValidationError("partition must have a block");
  for (int s : sizes_) {
    if (s < 1) throw ValidationError("partition block sizes must be >= 1");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const auto field = text.substr(pos, comma == std::string_view::npos
                                            ? std::string_view::npos
                                            : comma - pos);
    int value = 0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw ParseError("invalid partition '" + std::string(text) +
                       "': expected comma-separated block sizes");
    }
    sizes.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(sizes));
}

int Partition::total() const noexcept {
  return std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

int Partition::offset(int block) const {
  if (block < 0 || block >= parts()) {
    throw ValidationError("block index " + std::to_string(block) +
                          " out of range");
  }
  return std::accumulate(sizes_.begin(), sizes_.begin() + block, 0);
}

void Partition::validate(int n) const {
  if (parts() < 2 || parts() > n) {
    throw ValidationError("partition needs between 2 and " + std::to_string(n) +
                          " blocks, got " + std::to_string(parts()));
  }
  if (total() != n) {
    throw ValidationError("partition sizes sum to " + std::to_string(total()) +
                          ", expected " + std::to_string(n));
  }
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  // Compositions of n correspond to subsets of the n-1 cut points.
  for (std::uint32_t cuts = 1; cuts < (1U << (n - 1)); ++cuts) {
    std::vector<int> sizes;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if ((cuts >> i) & 1U) {
        sizes.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    sizes.push_back(run);
    out.emplace_back(std::move(sizes));
  }
  return out;
}

TargetSet project_targets(const TargetSet& targets, const Partition& partition,
                          int block) {
  partition.validate(targets.width());
  const int offset = partition.offset(block);
  const int width = partition.sizes()[static_cast<std::size_t>(block)];
  std::vector<BitString> members;
  members.reserve(targets.size());
  for (const auto& t : targets) members.push_back(t.slice(offset, width));
  return TargetSet(width, std::move(members));
}

DeggaPlan plan_degga(int n, const TargetSet& targets,
                     const Partition& partition) {
  if (targets.width() != n) {
    throw ValidationError("target width " + std::to_string(targets.width()) +
                          " does not match n = " + std::to_string(n));
  }
  targets.require_proper();
  partition.validate(n);

  std::vector<NodePlan> nodes;
  std::uint64_t tuples = 1;
  for (int j = 0; j < partition.parts(); ++j) {
    TargetSet local = project_targets(targets, partition, j);
    const int width = partition.sizes()[static_cast<std::size_t>(j)];
    std::optional<LongParams> params;
    if (local.is_proper()) {
      params = long_params(std::uint64_t{1} << width, local.size());
    }
    tuples *= local.size();
    nodes.push_back(NodePlan{j, partition.offset(j), width, std::move(local),
                             params});
  }
  // Distinct targets project to distinct node tuples.
  if (targets.size() > tuples) {
    throw ValidationError("internal: more targets than node tuples");
  }
  std::optional<LongParams> global;
  if (targets.size() < tuples) global = long_params(tuples, targets.size());
  return DeggaPlan{n, partition, targets, std::move(nodes), tuples, global};
}

Circuit build_node_stage(const DeggaPlan& plan) {
  Circuit stage(plan.n);
  for (const auto& node : plan.nodes) {
    Circuit local(node.width);
    for (int q = 0; q < node.width; ++q) local.append(Gate::h(q));
    if (node.params) {
      const Circuit step =
          long_iteration(node.width, node.targets, node.params->phi);
      for (int i = 0; i < node.params->iterations(); ++i) local.append(step);
    }
    stage.append_at(local, node.offset);
  }
  return stage;
}

std::optional<std::vector<int>> representative_qubits(const DeggaPlan& plan) {
  std::vector<int> reps;
  for (const auto& node : plan.nodes) {
    const auto& members = node.targets.members();
    if (members.size() == 1) {
      reps.push_back(node.offset);
    } else if (members.size() == 2) {
      const std::uint64_t diff = members[0].index() ^ members[1].index();
      // Lowest position = most significant differing bit.
      int pos = 0;
      while (((diff >> (node.width - 1 - pos)) & 1U) == 0) ++pos;
      reps.push_back(node.offset + pos);
    } else {
      return std::nullopt;
    }
  }
  return reps;
}

std::optional<Circuit> optimize_cross_node_oracle(const DeggaPlan& plan) {
  if (!plan.global) return std::nullopt;
  const auto reps = representative_qubits(plan);
  if (!reps) return std::nullopt;
  const std::vector<int> controls(reps->begin(), reps->end() - 1);
  Circuit block(plan.n);
  for (const auto& x : plan.targets) {
    std::vector<int> zeros;
    for (int q : *reps) {
      if (!x.bit(q)) zeros.push_back(q);
    }
    for (int q : zeros) block.append(Gate::x(q));
    block.append(
        Gate::controlled_phase(controls, reps->back(), plan.global->phi));
    for (int q : zeros) block.append(Gate::x(q));
  }
  return block;
}

namespace {

Circuit assemble(const DeggaPlan& plan, const Circuit& stage,
                 const Circuit& oracle) {
  const Circuit unstage = stage.inverse();
  const Circuit reflect = zero_phase_oracle(plan.n, plan.global->phi);
  Circuit c = stage;
  for (int i = 0; i < plan.global->iterations(); ++i) {
    c.append(oracle);
    c.append(unstage);
    c.append(reflect);
    c.append(stage);
  }
  return c;
}

}  // namespace

Circuit build_degga(const DeggaPlan& plan, OracleMode mode) {
  const Circuit stage = build_node_stage(plan);
  if (!plan.global) return stage;

  const Circuit plain = assemble(
      plan, stage, phase_oracle(plan.n, plan.targets, plan.global->phi));
  if (mode == OracleMode::kFull) return plain;

  const auto cross = optimize_cross_node_oracle(plan);
  if (!cross) {
    if (mode == OracleMode::kPreferCross) return plain;
    throw UnsupportedError(
        "cross-node oracle needs at most two targets per node that differ in "
        "one representative qubit");
  }
  Circuit optimized = assemble(plan, stage, *cross);
  if (!equal_up_to_global_phase(simulate(optimized), simulate(plain), 1e-9)) {
    if (mode == OracleMode::kPreferCross) return plain;
    throw UnsupportedError(
        "cross-node oracle changes the final state for this instance");
  }
  return optimized;
}

Circuit build_degga(const DeggaPlan& plan, bool optimize) {
  return build_degga(plan, optimize ? OracleMode::kCrossNode : OracleMode::kFull);
}

}  // namespace degga
