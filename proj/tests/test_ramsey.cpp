// Copyright 2026 The srkbench Authors
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

#include <vector>

#include "srk/ramsey.hpp"

namespace srk {
namespace {

SrkParams P(int q, std::vector<int> n, std::vector<int> m) { return SrkParams::make(Field::make_q(q), n, m); }

RamseyTable classical() {
  RamseyTable t;
  t.add(3, 2, 1, 6, 6, "user supplied");
  return t;
}

TEST(RamseyTable, Validation) {
  RamseyTable t;
  EXPECT_THROW(t.add(2, 2, 1, 1, 1, ""), Error);
  EXPECT_THROW(t.add(3, 2, 2, 1, 1, ""), Error);
  EXPECT_THROW(t.add(3, 2, 1, 7, 6, ""), Error);
  t.add(3, 3, 1, 17, 17, "");
  t.add(4, 2, 1, 18, 18, "");
  t.add(5, 2, 1, 43, 48, "");
  EXPECT_EQ(t.size(), 3u);
  EXPECT_THROW(t.exact(5, 2, 1), MissingTableEntry);
  EXPECT_THROW(t.exact(3, 4, 1), MissingTableEntry);
  const auto j = nlohmann::json::parse(R"({"entries":[{"k":3,"r":2,"s":1,"lo":6,"hi":6,"source":"x"}]})");
  EXPECT_EQ(RamseyTable::from_json(j).exact(3, 2, 1).lo, Nat(6));
  EXPECT_THROW(RamseyTable::from_json(nlohmann::json::parse(R"({"entries":[{"k":3}]})")), Error);
  EXPECT_THROW(RamseyTable::from_json(nlohmann::json::parse("[]")), Error);
}

TEST(Ramsey, HammingChainFromGv) {
  const auto b = hamming_to_ramsey_lb(3, 2, 1, 2, 2, classical());
  EXPECT_EQ(b.target, "R(3;4,2)");
  EXPECT_EQ(b.kind, "lower");
  EXPECT_EQ(b.value, "4");
  EXPECT_TRUE(b.reevaluate());
  ASSERT_GE(b.steps.size(), 3u);
  EXPECT_EQ(b.steps[2].rule, "gv-hamming");
  EXPECT_EQ(b.steps[2].output, "3");
  EXPECT_TRUE(b.has_flag("d = N: outside the d < N hypothesis"));
  const auto again = derived_from_json(nlohmann::json::parse(derived_to_json(b).dump()));
  EXPECT_TRUE(again.reevaluate());
  EXPECT_EQ(again.value, b.value);
}

TEST(Ramsey, HammingChainSuppliedBound) {
  const auto b = hamming_to_ramsey_lb(3, 2, 1, 3, 2, classical(), Nat(1));
  EXPECT_EQ(b.value, "2");
  EXPECT_TRUE(b.flags.empty());
  EXPECT_THROW(hamming_to_ramsey_lb(3, 2, 1, 2, 2, RamseyTable{}), MissingTableEntry);
  EXPECT_THROW(hamming_to_ramsey_lb(3, 2, 2, 2, 2, classical()), Error);
  RamseyTable t;
  t.add(3, 3, 1, 7, 7, "");
  EXPECT_THROW(hamming_to_ramsey_lb(3, 3, 1, 3, 2, t), Error);  // q = 6
  EXPECT_EQ(hamming_to_ramsey_lb(3, 3, 1, 3, 2, t, Nat(5)).value, "6");
}

TEST(Ramsey, TamperedTraceFailsReplay) {
  auto b = hamming_to_ramsey_lb(3, 2, 1, 2, 2, classical());
  b.steps[2].output = "4";
  EXPECT_FALSE(b.reevaluate());
}

TEST(Ramsey, SumRankDegeneratesToHamming) {
  const auto h = hamming_to_ramsey_lb(3, 2, 1, 2, 2, classical());
  const auto s = srk_to_ramsey_lb(P(5, {1, 1}, {1, 1}), 2, 3, 2, 1, classical(), gv_lower(P(5, {1, 1}, {1, 1}), 2));
  EXPECT_EQ(s.target, h.target);
  EXPECT_EQ(s.value, h.value);
  EXPECT_TRUE(s.reevaluate());
  // Without a supplied bound the exact alpha is used: A_5(2,2) = 5.
  const auto exact = srk_to_ramsey_lb(P(5, {1, 1}, {1, 1}), 2, 3, 2, 1, classical());
  EXPECT_EQ(exact.value, "6");
  EXPECT_TRUE(exact.reevaluate());
}

TEST(Ramsey, SumRankChecks) {
  EXPECT_THROW(srk_to_ramsey_lb(P(2, {1, 1}, {1, 1}), 1, 3, 2, 1, classical()), Error);  // 2 != 5
  ChainConfig tiny;
  tiny.c_prime = 1e-6;
  const auto b = srk_to_ramsey_lb(P(5, {1, 1}, {1, 1}), 1, 3, 2, 1, classical(), std::nullopt, tiny);
  EXPECT_TRUE(b.has_flag("inconsistent"));
  const auto ok = srk_to_ramsey_lb(P(5, {1, 1}, {1, 1}), 1, 3, 2, 1, classical());
  EXPECT_FALSE(ok.has_flag("inconsistent"));
  EXPECT_EQ(ok.value, "26");  // d = 1: the whole space
}

TEST(Ramsey, UpperChain) {
  ChainConfig cfg;
  cfg.eps = 0.5;
  cfg.c = 1.0;
  const auto p = P(2, std::vector<int>(8, 1), std::vector<int>(8, 1));
  const auto b = ramsey_upper_from_srk(p, 4, cfg, [](int) { return Nat(20); });
  EXPECT_EQ(b.steps[0].output, "1");  // j
  EXPECT_EQ(b.steps[1].output, "3");  // ceil(d - c j)
  EXPECT_EQ(b.value, "30");
  EXPECT_TRUE(b.reevaluate());
  EXPECT_EQ(b.target, "R(3;8,4)");
  const auto eps_branch = ramsey_upper_from_srk(p, 4, cfg, [](int) { return Nat(1); });
  EXPECT_EQ(eps_branch.value, "2");  // max(1.5, 2)
  EXPECT_THROW(ramsey_upper_from_srk(p, 5, cfg), Error);
  cfg.c = 4;
  EXPECT_THROW(ramsey_upper_from_srk(p, 4, cfg), Error);  // d - c j = 0
  cfg.c = 0.5;
  const auto rounded = ramsey_upper_from_srk(p, 4, cfg, [](int) { return Nat(1); });
  EXPECT_TRUE(rounded.has_flag("distance rounded up"));
}

TEST(Ramsey, ZeroRateInstance) {
  const auto p = P(2, {1, 1, 1, 1}, {1, 1, 1, 1});
  const auto r = zero_rate_instance_check(p, 2, 2);
  EXPECT_EQ(r.value, "16");
  EXPECT_TRUE(r.reevaluate());
  EXPECT_FALSE(r.has_flag("distance rounded up"));
  const auto bad = zero_rate_instance_check(p, 2, 3);
  EXPECT_TRUE(bad.has_flag("precondition failed: j too large"));
  const auto p3 = P(3, {1, 1, 1, 1}, {1, 1, 1, 1});
  const auto rounded = zero_rate_instance_check(p3, 3, 1);  // (2/3) * 3 = 2
  EXPECT_FALSE(rounded.has_flag("distance rounded up"));
  EXPECT_EQ(rounded.value, "27");  // A_3(4, 2)
  const auto frac = zero_rate_instance_check(P(3, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}), 3, 1);  // 8/3
  EXPECT_TRUE(frac.has_flag("distance rounded up"));
}

}  // namespace
}  // namespace srk
