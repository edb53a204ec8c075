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

#include <numbers>

#include "degga/degga.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

namespace degga {
namespace {

using testing::Gen;

constexpr double kPi = std::numbers::pi;

struct TableRow {
  const char* name;
  GateKind kind;
  int controls;
  std::size_t single;
  std::size_t two_qubit;
  std::size_t cnot;
  std::size_t ct;
  std::size_t cps;
  std::size_t total;
  int depth;
};

// Published decomposition statistics.
constexpr TableRow kTable[] = {
    {"C2X", GateKind::MCX, 2, 9, 6, 6, 0, 0, 15, 12},
    {"C3X", GateKind::MCX, 3, 62, 37, 36, 1, 0, 99, 69},
    {"C4X", GateKind::MCX, 4, 380, 227, 218, 6, 3, 607, 408},
    {"C2PS", GateKind::MCPS, 2, 0, 5, 2, 0, 3, 5, 5},
    {"C3PS", GateKind::MCPS, 3, 0, 13, 6, 0, 7, 13, 13},
    {"C4PS", GateKind::MCPS, 4, 124, 89, 78, 2, 9, 213, 149},
    {"C5PS", GateKind::MCPS, 5, 884, 545, 514, 14, 17, 1429, 959},
};

void PrintTo(const TableRow& row, std::ostream* os) { *os << row.name; }

Gate canonical(const TableRow& row, double phase) {
  std::vector<int> controls;
  for (int i = 0; i < row.controls; ++i) controls.push_back(i);
  return row.kind == GateKind::MCX ? Gate::mcx(controls, row.controls)
                                   : Gate::mcps(controls, row.controls, phase);
}

Circuit single(const Gate& g, int n) {
  Circuit c(n);
  c.append(g);
  return c;
}

Circuit decompose(const Gate& g) {
  switch (g.num_controls()) {
    case 2:
      return decompose_c2(g);
    case 3:
      return decompose_c3(g);
    case 4:
      return decompose_c4(g);
    default:
      return decompose_c5ps(g);
  }
}

class TableTest : public ::testing::TestWithParam<TableRow> {};

TEST_P(TableTest, CensusAndDepthMatch) {
  const auto& row = GetParam();
  const auto s = census(decompose(canonical(row, 0.37)));
  EXPECT_EQ(s.single_qubit(), row.single);
  EXPECT_EQ(s.two_qubit(), row.two_qubit);
  EXPECT_EQ(s.count(GateKind::CX), row.cnot);
  EXPECT_EQ(s.count(GateKind::CT), row.ct);
  EXPECT_EQ(s.count(GateKind::CPS), row.cps);
  EXPECT_EQ(s.total, row.total);
  EXPECT_EQ(s.depth, row.depth);
}

TEST_P(TableTest, UnitaryEqualsOriginal) {
  const auto& row = GetParam();
  Gen gen(61);
  const int trials = row.kind == GateKind::MCX ? 1 : 5;
  for (int i = 0; i < trials; ++i) {
    const Gate g = canonical(row, gen.phase());
    const int n = row.controls + 1;
    const auto lowered = testing::reference_unitary(decompose(g));
    const auto original = testing::reference_unitary(single(g, n));
    ASSERT_LT(testing::phase_aligned_diff(lowered, original), 1e-9);
  }
}

TEST_P(TableTest, OnlyBasisKindsRemain) {
  const auto& row = GetParam();
  const Basis basis = Basis::standard();
  const Circuit lowered = decompose(canonical(row, 1.0));
  for (const auto& g : lowered.gates()) {
    ASSERT_TRUE(basis.contains(g.kind())) << kind_name(g.kind());
  }
}

INSTANTIATE_TEST_SUITE_P(Rows, TableTest, ::testing::ValuesIn(kTable),
                         [](const auto& info) { return info.param.name; });

TEST(LoweringTest, ZeroPhaseLowersToIdentity) {
  for (int k = 2; k <= 5; ++k) {
    std::vector<int> controls;
    for (int i = 0; i < k; ++i) controls.push_back(i);
    const Circuit c = lower_circuit(single(Gate::mcps(controls, k, 0.0), k + 1));
    const auto u = testing::reference_unitary(c);
    for (std::size_t j = 0; j < u.size(); ++j) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        ASSERT_LT(std::abs(u[j][i] - (i == j ? 1.0 : 0.0)), 1e-10);
      }
    }
  }
}

TEST(LoweringTest, ToffoliTruthTables) {
  for (int k = 3; k <= 4; ++k) {
    std::vector<int> controls;
    for (int i = 0; i < k; ++i) controls.push_back(i);
    const Circuit c = lower_circuit(single(Gate::mcx(controls, k), k + 1));
    const std::uint64_t dim = std::uint64_t{1} << (k + 1);
    for (std::uint64_t in = 0; in < dim; ++in) {
      const bool all = (in >> 1) == (dim >> 1) - 1;
      const std::uint64_t out = all ? in ^ 1U : in;
      auto s = StateVector::basis(k + 1, in);
      s.apply(c);
      ASSERT_NEAR(s.probability(out), 1.0, 1e-9) << k << " " << in;
    }
  }
}

TEST(LoweringTest, FiveControlPhaseDiagonal) {
  const Circuit c =
      decompose_c5ps(Gate::mcps({0, 1, 2, 3, 4}, 5, 0.77));
  for (std::uint64_t i = 0; i < 64; ++i) {
    auto s = StateVector::basis(6, i);
    s.apply(c);
    const Amplitude expect = i == 63 ? std::polar(1.0, 0.77) : Amplitude(1.0);
    ASSERT_LT(std::abs(s[i] - expect), 1e-9) << i;
  }
}

TEST(LoweringTest, ArityChecks) {
  EXPECT_THROW(decompose_c3(Gate::mcx({0, 1}, 2)), ValidationError);
  EXPECT_THROW(decompose_c5ps(Gate::mcx({0, 1, 2, 3, 4}, 5)), ValidationError);
  EXPECT_THROW(decompose_once(Gate::h(0)), ValidationError);
  EXPECT_THROW(lower_circuit(single(Gate::mcx({0, 1, 2, 3, 4, 5}, 6), 7)),
               UnsupportedError);
  EXPECT_THROW(decompose_once(Gate::mcps({0, 1, 2, 3, 4, 5}, 6, 1.0)),
               UnsupportedError);
}

TEST(LoweringTest, OneStepRules) {
  const Circuit c2 = decompose_once(Gate::mcps({0, 1}, 2, 0.8));
  const std::vector<Gate> expect{Gate::cps(1, 2, 0.4), Gate::cx(0, 1),
                                 Gate::cps(1, 2, -0.4), Gate::cx(0, 1),
                                 Gate::cps(0, 2, 0.4)};
  EXPECT_EQ(c2.gates(), expect);

  const auto c4 = census(decompose_once(Gate::mcps({0, 1, 2, 3}, 4, 0.8)));
  EXPECT_EQ(c4.count(GateKind::MCX, 3), 2U);
  EXPECT_EQ(c4.count(GateKind::CPS), 2U);
  EXPECT_EQ(c4.count(GateKind::MCPS, 3), 1U);

  const auto x3 = census(decompose_once(Gate::mcx({0, 1, 2}, 3)));
  EXPECT_EQ(x3.count(GateKind::MCX, 2), 6U);
  EXPECT_EQ(x3.count(GateKind::CT), 1U);
  EXPECT_EQ(x3.total, 15U);
}

TEST(LoweringProperty, RandomPlacementsKeepUnitary) {
  Gen gen(62);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.uniform_int(3, 6);
    const int k = gen.uniform_int(2, std::min(5, n - 1));
    auto q = gen.distinct_qubits(n, k + 1);
    const int t = q.back();
    q.pop_back();
    const bool phase = k == 5 || gen.uniform_int(0, 1) == 1;
    const Gate g = phase ? Gate::mcps(q, t, gen.phase()) : Gate::mcx(q, t);
    const Circuit original = single(g, n);
    const Circuit lowered = lower_circuit(original);
    ASSERT_LT(testing::phase_aligned_diff(testing::reference_unitary(lowered),
                                          testing::reference_unitary(original)),
              1e-9);
  }
}

TEST(LoweringProperty, WholeCircuitsKeepFinalState) {
  Gen gen(63);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.uniform_int(3, 6);
    const Circuit c = gen.circuit(n, 12);
    const auto psi = gen.state(n);
    const auto a = testing::reference_run(c, psi);
    const auto b = testing::reference_run(lower_circuit(c), psi);
    ASSERT_LT(testing::vec_phase_aligned_diff(b, a), 1e-8);
  }
}

TEST(LoweringTest, BuilderCircuitsLowerToDerivedCounts) {
  const auto t = TargetSet::parse({"000000", "111111"});
  const Circuit lng = build_long(6, t);
  const Circuit lowered_long = lower_circuit(lng);
  EXPECT_EQ(census(lowered_long).total, 150U + 12U * 1429U);
  const Circuit opt =
      build_degga(plan_degga(6, t, Partition({2, 2, 2})), true);
  const Circuit lowered_opt = lower_circuit(opt);
  EXPECT_EQ(census(lowered_opt).total, 171U + 1429U + 2U * 5U);
  EXPECT_TRUE(equal_up_to_global_phase(simulate(lowered_long), simulate(lng),
                                       1e-8));
  EXPECT_TRUE(equal_up_to_global_phase(simulate(lowered_opt), simulate(opt),
                                       1e-8));
}

TEST(LoweringTest, BasisCircuitIsUnchanged) {
  Circuit c(6);
  for (int q = 0; q < 6; ++q) c.append(Gate::h(q));
  EXPECT_EQ(lower_circuit(c), c);
}

TEST(BasisTest, Validation) {
  EXPECT_THROW(Basis({GateKind::H, GateKind::T}), ValidationError);
  EXPECT_THROW(Basis({GateKind::CX, GateKind::H}), ValidationError);
  EXPECT_THROW(Basis({GateKind::CX, GateKind::PS, GateKind::MCX}),
               ValidationError);
  EXPECT_TRUE(Basis::standard().contains(GateKind::CT));
  EXPECT_FALSE(Basis::standard().contains(GateKind::MCPS));
}

TEST(BasisTest, ReducedBasesStayEquivalent) {
  Gen gen(64);
  const Basis no_ct{GateKind::H,  GateKind::X,  GateKind::T,
                    GateKind::Tdg, GateKind::PS, GateKind::CX,
                    GateKind::CPS};
  const Basis minimal{GateKind::H, GateKind::X, GateKind::PS, GateKind::CX};
  for (const Basis* basis : {&no_ct, &minimal}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Circuit c = gen.circuit(5, 8);
      const Circuit lowered = lower_circuit(c, *basis);
      for (const auto& g : lowered.gates()) {
        ASSERT_TRUE(basis->contains(g.kind())) << kind_name(g.kind());
      }
      ASSERT_LT(testing::phase_aligned_diff(testing::reference_unitary(lowered),
                                            testing::reference_unitary(c)),
                1e-9);
    }
  }
  const Basis t_only{GateKind::H, GateKind::X, GateKind::T, GateKind::CX};
  EXPECT_THROW(lower_circuit(single(Gate::cps(0, 1, 0.3), 2), t_only),
               ValidationError);
}

TEST(LoweringTest, ControlledTMatchesQuarterPhase) {
  const auto a = testing::reference_unitary(single(Gate::ct(0, 1), 2));
  const auto b = testing::reference_unitary(single(Gate::cps(0, 1, kPi / 4), 2));
  EXPECT_LT(testing::phase_aligned_diff(a, b), 1e-15);
}

}  // namespace
}  // namespace degga
