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

#include "oracles.hpp"
#include "srk/counting.hpp"
#include "srk/graph.hpp"

namespace srk {
namespace {

SrkParams P(int q, std::vector<int> n, std::vector<int> m) { return SrkParams::make(Field::make_q(q), n, m); }

std::vector<SrkParams> small_spaces() {
  return {P(2, {1, 1}, {1, 1}), P(2, {1, 1, 1}, {1, 1, 1}), P(2, {2}, {2}),       P(2, {1, 1}, {2, 2}),
          P(2, {1, 2}, {1, 2}), P(3, {1, 1}, {1, 1}),       P(2, {2, 1}, {2, 1}), P(3, {1, 1}, {2, 1}),
          P(4, {1, 1}, {1, 1}), P(2, {2}, {3}),             P(2, {1, 1, 1, 1}, {1, 1, 1, 1})};
}

TEST(Graph, ExactTMatchesOracle) {
  for (const auto& p : small_spaces())
    for (int k = 0; k <= p.max_weight(); ++k) {
      const Nat t = exact_T({p, k});
      ASSERT_EQ(t, Nat(oracle::neighbourhood_edges(p, k))) << p.describe() << " k=" << k;
      EXPECT_EQ(neighbourhood_edges_by_rank_profile({p, k}), t);
    }
}

TEST(Graph, RankProfileOnLargerSpaces) {
  // Too big for the pair oracle; compare the two library routes.
  for (const auto& [p, k] : std::vector<std::pair<SrkParams, int>>{
           {P(2, {3}, {3}), 2}, {P(3, {2}, {2}), 1}, {P(2, {2, 1, 1}, {3, 2, 1}), 2}, {P(3, {2, 1}, {2, 2}), 2}})
    EXPECT_EQ(neighbourhood_edges_by_rank_profile({p, k}), exact_T({p, k})) << p.describe();
}

TEST(Graph, CubeStats) {
  const auto s = graph_stats({P(2, {1, 1, 1}, {1, 1, 1}), 2});
  EXPECT_EQ(s.num_vertices, Nat(8));
  EXPECT_EQ(s.D, Nat(6));
  EXPECT_EQ(s.T, Nat(12));
  EXPECT_EQ(s.Delta, Nat(32));
  ASSERT_TRUE(s.eps_star);
  EXPECT_NEAR(*s.eps_star, 0.61315, 1e-5);
}

TEST(Graph, StatsEdgeCases) {
  const auto p = P(2, {1, 1}, {1, 1});
  const auto s0 = graph_stats({p, 0});
  EXPECT_EQ(s0.D, Nat(0));
  EXPECT_EQ(s0.T, Nat(0));
  EXPECT_FALSE(s0.eps_star);
  const auto s1 = graph_stats({p, 1});  // 4-cycle
  EXPECT_EQ(s1.D, Nat(2));
  EXPECT_EQ(s1.T, Nat(0));
  EXPECT_TRUE(std::isinf(*s1.eps_star));
  EXPECT_THROW(graph_stats({p, -1}), Error);
  EXPECT_THROW(exact_T({P(2, {3, 3}, {3, 3}), 3}, 1000), BudgetExceeded);
}

TEST(Graph, TriangleIdentity) {
  for (const auto& p : small_spaces())
    for (int k = 1; k <= p.max_weight(); ++k) {
      const auto s = graph_stats({p, k});
      EXPECT_EQ(3 * count_triangles_bruteforce({p, k}), s.T * s.num_vertices);
      EXPECT_EQ(3 * s.Delta, s.T * s.num_vertices);
    }
}

TEST(Graph, CayleyDegrees) {
  for (const auto& p : small_spaces()) {
    const auto reps = verify_cayley_all_radii(p, 1 << 20);
    ASSERT_EQ(reps.size(), static_cast<std::size_t>(p.max_weight() + 1));
    for (int k = 0; k <= p.max_weight(); ++k) {
      EXPECT_TRUE(reps[k].ok());
      EXPECT_EQ(reps[k].expected_degree, degree_D(p, k));
      EXPECT_EQ(reps[k].vertices_checked, SrkSpace(p).size());
    }
  }
  const auto sampled = verify_cayley({P(2, {2, 2}, {2, 2}), 2}, 50, 9);
  EXPECT_EQ(sampled.vertices_checked, 50u);
  EXPECT_TRUE(sampled.ok());
}

TEST(Graph, ExactAlphaSmall) {
  const auto a1 = max_independent_set({P(2, {1, 1}, {1, 1}), 1});
  EXPECT_EQ(a1.size, Nat(2));
  const auto a2 = max_independent_set({P(2, {1, 1, 1}, {1, 1, 1}), 1});
  EXPECT_EQ(a2.size, Nat(4));
  const auto a3 = max_independent_set({P(2, {2}, {2}), 1});
  EXPECT_EQ(a3.size, Nat(4));
  for (const auto* r : {&a1, &a2, &a3}) EXPECT_GE(min_distance(r->witness), 2);
}

TEST(Graph, ExactAlphaMatchesSubsetSearch) {
  for (const auto& p : small_spaces()) {
    if (SrkSpace(p).size() > 16) continue;
    for (int k = 0; k <= p.max_weight(); ++k) {
      const auto r = max_independent_set({p, k});
      const std::size_t brute = oracle::alpha_bruteforce(p, k);
      ASSERT_EQ(r.size, Nat(brute)) << p.describe() << " k=" << k;
      EXPECT_EQ(r.witness.size(), brute);
      if (brute >= 2) EXPECT_GT(min_distance(r.witness), k);
      EXPECT_GE(r.upper_bound, r.size);
    }
  }
}

TEST(Graph, KnownBinaryCodeSizes) {
  // A_2(N, d) for small N.
  struct Case {
    int N, d, a;
  };
  for (const Case& c : {Case{5, 3, 4}, Case{6, 3, 8}, Case{7, 3, 16}, Case{6, 4, 4}, Case{8, 4, 16}, Case{5, 2, 16},
                        Case{7, 5, 2}}) {
    const auto p = P(2, std::vector<int>(c.N, 1), std::vector<int>(c.N, 1));
    const auto r = max_independent_set({p, c.d - 1});
    EXPECT_EQ(r.size, Nat(c.a)) << "N=" << c.N << " d=" << c.d;
    EXPECT_GE(min_distance(r.witness), c.d);
  }
}

TEST(Graph, NodeLimit) {
  const auto p = P(2, std::vector<int>(9, 1), std::vector<int>(9, 1));
  EXPECT_THROW(max_independent_set({p, 2}, {1 << 12, 5}), BudgetExceeded);
  EXPECT_THROW(max_independent_set({P(2, {3, 3}, {3, 3}), 1}, {1000, 100}), BudgetExceeded);
}

TEST(Graph, GreedyCodeAndPartition) {
  for (const auto& p : small_spaces())
    for (int k = 1; k <= p.max_weight(); ++k)
      for (auto order : {OrderPolicy::kLex, OrderPolicy::kWeightThenLex}) {
        const PowerGraphSpec spec{p, k};
        const auto code = greedy_gv_code(spec, order);
        const Nat gv = ceil_div(space_size(p), ball_volume(p, k));
        EXPECT_GE(Nat(code.size()), gv);
        if (code.size() >= 2) EXPECT_GT(min_distance(code), k);
        const auto parts = greedy_partition(spec, order);
        EXPECT_LE(Nat(parts.size()), ball_volume(p, k));
        std::size_t total = 0;
        for (const auto& c : parts) {
          total += c.size();
          if (c.size() >= 2) EXPECT_GT(min_distance(c), k);
        }
        EXPECT_EQ(Nat(total), space_size(p));
        EXPECT_LE(Nat(code.size()), max_independent_set(spec).size);
      }
  // The lex greedy code for the cube at distance 2 is the even-weight code.
  const auto even = greedy_gv_code({P(2, {1, 1, 1}, {1, 1, 1}), 1});
  EXPECT_EQ(even.size(), 4u);
  EXPECT_EQ(parse_order_policy("weight-then-lex"), OrderPolicy::kWeightThenLex);
  EXPECT_THROW(parse_order_policy("random"), Error);
}

}  // namespace
}  // namespace srk
