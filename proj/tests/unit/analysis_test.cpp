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

#include <gtest/gtest.h>

#include "degga/degga.hpp"

namespace degga {
namespace {

TargetSet two_targets() { return TargetSet::parse({"000000", "111111"}); }

TEST(SingleTargetFormulaTest, Examples) {
  const auto d2 = depth_formula_single_target(2);
  EXPECT_EQ(d2.modified_grover, 17);
  EXPECT_EQ(d2.dega, 9);
  EXPECT_EQ(depth_formula_single_target(3).dega, 17);
  EXPECT_EQ(depth_formula_single_target(4).dega, 9);
  EXPECT_THROW(depth_formula_single_target(0), ValidationError);
}

TEST(MultiTargetFormulaTest, Examples) {
  EXPECT_EQ(depth_formula_multi_target(6, 2), 45);
  EXPECT_EQ(depth_formula_multi_target(2, 1), 17);
  EXPECT_EQ(depth_formula_multi_target(6, 1), 49);
  EXPECT_THROW(depth_formula_multi_target(2, 4), ValidationError);
  EXPECT_THROW(depth_formula_multi_target(2, 0), ValidationError);
}

TEST(MultiTargetFormulaTest, SingleTargetCaseAgrees) {
  for (int n = 1; n <= 12; ++n) {
    ASSERT_EQ(depth_formula_multi_target(n, 1),
              depth_formula_single_target(n).modified_grover)
        << n;
  }
}

TEST(DistributedFormulaTest, Examples) {
  const std::uint64_t two[] = {2, 2};
  EXPECT_EQ(depth_formula_degga(6, Partition({3, 3}), 2, two), 78);
  const std::uint64_t three[] = {2, 2, 2};
  EXPECT_EQ(depth_formula_degga(6, Partition({2, 2, 2}), 2, three), 45);
}

TEST(DistributedFormulaTest, Rejections) {
  const std::uint64_t one[] = {2};
  EXPECT_THROW(depth_formula_degga(6, Partition({6}), 2, one), ValidationError);
  const std::uint64_t two[] = {2, 2};
  EXPECT_THROW(depth_formula_degga(6, Partition({2, 2, 2}), 2, two),
               ValidationError);
  EXPECT_THROW(depth_formula_degga(6, Partition({3, 3}), 5, two),
               ValidationError);
}

TEST(CompareTest, LongAgainstOptimizedThreeNode) {
  const Circuit baseline = build_long(6, two_targets());
  const std::vector<Circuit> candidates{
      build_degga(plan_degga(6, two_targets(), Partition({2, 2, 2})), true)};
  const auto r = compare(baseline, candidates);
  ASSERT_EQ(r.rows.size(), 2U);
  EXPECT_EQ(r.rows[0].before.total, 162U);
  EXPECT_EQ(r.rows[0].after.total, 17298U);
  EXPECT_EQ(r.rows[1].before.total, 174U);
  EXPECT_EQ(r.rows[1].after.total, 1610U);
  EXPECT_NEAR(r.gate_reduction, 0.907, 0.001);
  EXPECT_NEAR(r.depth_reduction, 0.913, 0.002);
  EXPECT_DOUBLE_EQ(r.gate_reduction, 1.0 - 1610.0 / 17298.0);
  EXPECT_DOUBLE_EQ(r.depth_reduction,
                   1.0 - static_cast<double>(r.rows[1].after.depth) /
                             r.rows[0].after.depth);
}

TEST(CompareTest, SelfComparisonHasNoReduction) {
  const Circuit c = build_long(4, TargetSet::parse({"0110"}));
  const std::vector<Circuit> same{c};
  const auto r = compare(c, same);
  EXPECT_EQ(r.gate_reduction, 0.0);
  EXPECT_EQ(r.depth_reduction, 0.0);
}

TEST(CompareTest, WidthMismatch) {
  const std::vector<Circuit> other{Circuit(3)};
  EXPECT_THROW(compare(Circuit(2), other), ValidationError);
}

TEST(CompareTest, LabelsFollowInputs) {
  const std::vector<Circuit> other{Circuit(2), Circuit(2)};
  const std::vector<std::string> labels{"a", "b", "c"};
  const auto r = compare(Circuit(2), other, Basis::standard(), labels);
  EXPECT_EQ(r.rows[2].label, "c");
  const std::vector<std::string> short_labels{"a"};
  EXPECT_THROW(compare(Circuit(2), other, Basis::standard(), short_labels),
               ValidationError);
}

TEST(DivergenceTest, ReferenceRowsShowBothNumbers) {
  const auto rows = reference_divergences();
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0].formula_depth, 45);
  EXPECT_EQ(rows[0].measured_depth, 37);
  EXPECT_EQ(rows[1].formula_depth, 78);
  EXPECT_EQ(rows[1].measured_depth, 37);
}

TEST(DivergenceTest, MeasuredDepthComesFromBuiltCircuit) {
  const auto t = TargetSet::parse({"0101", "1100", "0011"});
  const auto d = long_depth_divergence(4, t);
  EXPECT_EQ(d.measured_depth, depth(build_long(4, t)));
  EXPECT_EQ(d.formula_depth, depth_formula_multi_target(4, 3));
}

}  // namespace
}  // namespace degga
