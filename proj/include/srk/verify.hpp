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

// Self-checks run by `srk verify`: every closed form against enumeration,
// and the structural identities of the power graphs on a sweep.

#ifndef SRK_VERIFY_HPP_
#define SRK_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "srk/bounds.hpp"
#include "srk/counting.hpp"
#include "srk/graph.hpp"
#include "srk/matrix.hpp"
#include "srk/space.hpp"
#include "srk/sweep.hpp"

namespace srk {

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t marsaglia_samples = 100000;
  std::vector<int> sweep_qs = {2, 3};
  std::uint64_t sweep_space = kDefaultSweepSpace;
  BoundOptions bounds;
};

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;  // e.g. alpha over budget
  std::optional<nlohmann::ordered_json> counterexample;

  bool passed() const { return failures == 0; }

  void check(bool ok, const std::function<nlohmann::ordered_json()>& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    if (!counterexample) counterexample = describe();
  }
};

inline nlohmann::ordered_json matrix_json(const Matrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::ordered_json params_json(const SrkParams& p) {
  return {{"q", p.q()}, {"n", p.n}, {"m", p.m}};
}

namespace internal {

inline nlohmann::ordered_json nat_list(const std::vector<Nat>& v) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

// First `rank` diagonal entries set to one.
inline Matrix diagonal_of_rank(int n, int rank) {
  Matrix x(n, n);
  for (int i = 0; i < rank; ++i) x(i, i) = 1;
  return x;
}

inline void suite_rank_distribution(SuiteResult& r) {
  const std::vector<std::tuple<int, int, int>> cases = {{2, 1, 1}, {2, 1, 2}, {2, 2, 2}, {2, 2, 3}, {2, 1, 3},
                                                       {2, 3, 3}, {3, 1, 1}, {3, 1, 2}, {3, 2, 2}, {3, 2, 3}};
  for (auto [q, rows, cols] : cases) {
    const Field f = Field::make_q(q);
    std::vector<Nat> hist(std::min(rows, cols) + 1, 0);
    for (const Matrix& m : enumerate_matrices(rows, cols, f)) hist[rank(f, m)] += 1;
    const auto formula = rank_distribution(rows, cols, q).counts;
    r.check(hist == formula, [&] {
      return nlohmann::ordered_json{
          {"q", q}, {"rows", rows}, {"cols", cols}, {"enumerated", nat_list(hist)}, {"formula", nat_list(formula)}};
    });
  }
}

inline void suite_q_identity(SuiteResult& r) {
  for (int q : {2, 3})
    for (int n = 1; n <= 6; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          Nat sum = 0;
          for (int c = 0; c <= j; ++c) sum += q_closed(i, j, c, n, q);
          const Nat m = square_rank_count(n, j, q);
          r.check(sum == m, [&] {
            return nlohmann::ordered_json{
                {"q", q}, {"n", n}, {"i", i}, {"j", j}, {"sum_Q", sum.str()}, {"M", m.str()}};
          });
        }
}

inline void suite_q_oracle(SuiteResult& r) {
  const int q = 2;
  const Field f = Field::make_q(q);
  for (int n : {2, 3})
    for (int i = 0; i <= n; ++i) {
      const Matrix x = diagonal_of_rank(n, i);
      std::vector<std::vector<Nat>> tally(n + 1, std::vector<Nat>(n + 1, 0));
      for (const Matrix& y : enumerate_matrices(n, n, f)) tally[rank(f, y)][col_space_intersection_dim(f, x, y)] += 1;
      for (int j = 0; j <= n; ++j)
        for (int c = 0; c <= j; ++c) {
          const Nat closed = q_closed(i, j, c, n, q);
          r.check(closed == tally[j][c], [&] {
            return nlohmann::ordered_json{{"q", q},        {"n", n}, {"i", i}, {"j", j}, {"c", c},
                                          {"closed", closed.str()}, {"enumerated", tally[j][c].str()}};
          });
        }
    }
}

inline void marsaglia_check(SuiteResult& r, const Field& f, const Matrix& x, const Matrix& y) {
  const int rx = rank(f, x), ry = rank(f, y);
  const int c = col_space_intersection_dim(f, x, y);
  const int rr = row_space_intersection_dim(f, x, y);
  const int rd = rank(f, sub(f, x, y));
  r.check(rd >= rx + ry - c - rr, [&] {
    return nlohmann::ordered_json{{"q", f.q()},     {"X", matrix_json(x)}, {"Y", matrix_json(y)}, {"rk_X", rx},
                                  {"rk_Y", ry},     {"col_cap", c},        {"row_cap", rr},        {"rk_X_minus_Y", rd}};
  });
}

inline void suite_marsaglia(SuiteResult& r, const VerifyOptions& opt) {
  const Field f2 = Field::make_q(2);
  for (const Matrix& x : enumerate_matrices(2, 2, f2))
    for (const Matrix& y : enumerate_matrices(2, 2, f2)) marsaglia_check(r, f2, x, y);
  const Field f3 = Field::make_q(3);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> digit(0, 2);
  auto random_matrix = [&] {
    Matrix m(4, 4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m(a, b) = static_cast<Elem>(digit(rng));
    return m;
  };
  for (std::uint64_t s = 0; s < opt.marsaglia_samples; ++s) {
    const Matrix x = random_matrix();
    const Matrix y = random_matrix();
    marsaglia_check(r, f3, x, y);
  }
}

inline void bridge_check(SuiteResult& r, const SrkParams& p) {
  const auto rep = wt_preservation_check(p);
  r.check(rep.ok(), [&] {
    nlohmann::ordered_json j{{"params", params_json(p)},
                             {"elements", rep.elements},
                             {"equality_expected", rep.equality_expected},
                             {"inequality_violations", rep.inequality_violations},
                             {"equality_failures", rep.equality_failures},
                             {"injective", rep.injective}};
    if (rep.first_violation) {
      auto blocks = nlohmann::ordered_json::array();
      for (const auto& b : rep.first_violation->blocks) blocks.push_back(matrix_json(b));
      j["first_violation"] = blocks;
    }
    return j;
  });
}

inline SrkParams make_params(int q, std::vector<int> n, std::vector<int> m) {
  return SrkParams::make(Field::make_q(q), std::move(n), std::move(m));
}

inline void suite_isometry(SuiteResult& r) {
  for (const auto& p : {make_params(2, {1, 1}, {2, 2}), make_params(2, {1, 1, 1}, {2, 2, 2}),
                        make_params(3, {1, 1}, {2, 2}), make_params(4, {1, 1}, {2, 2}), make_params(2, {1, 1}, {3, 3})})
    bridge_check(r, p);
}

inline void suite_hamming_inequality(SuiteResult& r) {
  for (const auto& p : {make_params(2, {1, 2}, {2, 2}), make_params(2, {2}, {3}), make_params(2, {1, 1}, {1, 2}),
                        make_params(3, {1, 2}, {2, 2}), make_params(2, {2, 1}, {2, 3})})
    bridge_check(r, p);
}

inline std::vector<SrkParams> small_sweep(const VerifyOptions& opt) { return default_sweep(opt.sweep_qs, opt.sweep_space); }

inline void suite_cayley(SuiteResult& r, const VerifyOptions& opt) {
  for (const auto& p : small_sweep(opt)) {
    const auto reps = verify_cayley_all_radii(p, UINT64_MAX, opt.seed);
    for (std::size_t k = 0; k < reps.size(); ++k)
      r.check(reps[k].ok(), [&] {
        nlohmann::ordered_json j{{"params", params_json(p)},
                                 {"k", k},
                                 {"expected_degree", reps[k].expected_degree.str()},
                                 {"degree_violations", reps[k].degree_violations},
                                 {"translation_violations", reps[k].translation_violations}};
        if (reps[k].first_bad_vertex) j["vertex"] = *reps[k].first_bad_vertex;
        return j;
      });
  }
}

// 3 Delta = T |V| with Delta counted directly, and T from two routes.
inline void suite_triangle_identity(SuiteResult& r, const VerifyOptions& opt) {
  for (const auto& p : small_sweep(opt))
    for (int k = 1; k <= p.max_weight(); ++k) {
      const PowerGraphSpec spec{p, k};
      const Nat T = exact_T(spec, UINT64_MAX);
      const Nat T2 = neighbourhood_edges_by_rank_profile(spec);
      const Nat tri = count_triangles_bruteforce(spec);
      const Nat V = space_size(p);
      r.check(3 * tri == T * V && T == T2, [&] {
        return nlohmann::ordered_json{{"params", params_json(p)}, {"k", k},           {"T", T.str()},
                                      {"T_profile", T2.str()},    {"triangles", tri.str()}, {"V", V.str()}};
      });
    }
}

inline void suite_gv_chain(SuiteResult& r, const VerifyOptions& opt) {
  for (const auto& p : small_sweep(opt))
    for (int d = 1; d <= p.max_weight(); ++d) {
      BoundOptions bo = opt.bounds;
      const BoundReport rep = bound_report(p, d, bo);
      auto describe = [&] {
        return nlohmann::ordered_json{{"params", params_json(p)},
                                      {"d", d},
                                      {"gv", rep.gv.str()},
                                      {"greedy", rep.greedy ? rep.greedy->str() : kNotComputed},
                                      {"alpha", rep.alpha ? rep.alpha->str() : kNotComputed},
                                      {"gv_ratio", rep.gv_ratio.str()}};
      };
      if (!rep.alpha) ++r.skipped;
      r.check(rep.greedy.has_value() && rep.chain_ok(), describe);
      if (d == 1) continue;
      const auto parts = greedy_partition({p, d - 1}, bo.order, bo.max_vertices);
      const Nat floor_ratio = rep.gv_ratio.floor();
      for (const auto& c : parts) {
        const auto md = c.cached_min_distance();
        r.check(!md || *md >= d, [&] {
          auto j = describe();
          j["class_size"] = c.size();
          j["class_min_distance"] = *md;
          return j;
        });
      }
      // average class size >= floor(|V| / V(d-1)), i.e. |V| >= classes * floor
      r.check(space_size(p) >= Nat(parts.size()) * floor_ratio, [&] {
        auto j = describe();
        j["classes"] = parts.size();
        return j;
      });
    }
}

}  // namespace internal

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rank-distribution", "q-identity",         "q-oracle",
                                                 "marsaglia",         "isometry",           "hamming-inequality",
                                                 "cayley",            "triangle-identity",  "gv-chain"};
  return names;
}

inline SuiteResult run_suite(const std::string& name, const VerifyOptions& opt = {}) {
  SuiteResult r{name};
  if (name == "rank-distribution")
    internal::suite_rank_distribution(r);
  else if (name == "q-identity")
    internal::suite_q_identity(r);
  else if (name == "q-oracle")
    internal::suite_q_oracle(r);
  else if (name == "marsaglia")
    internal::suite_marsaglia(r, opt);
  else if (name == "isometry")
    internal::suite_isometry(r);
  else if (name == "hamming-inequality")
    internal::suite_hamming_inequality(r);
  else if (name == "cayley")
    internal::suite_cayley(r, opt);
  else if (name == "triangle-identity")
    internal::suite_triangle_identity(r, opt);
  else if (name == "gv-chain")
    internal::suite_gv_chain(r, opt);
  else
    throw UnknownSuite("unknown suite '" + name + "'");
  return r;
}

// "all" expands to every suite.
inline std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& opt = {}) {
  if (name != "all") return {run_suite(name, opt)};
  std::vector<SuiteResult> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, opt));
  return out;
}

inline nlohmann::ordered_json suite_to_json(const SuiteResult& r) {
  nlohmann::ordered_json j{{"suite", r.name},
                           {"passed", r.passed()},
                           {"checks", r.checks},
                           {"failures", r.failures},
                           {"skipped", r.skipped}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

}  // namespace srk

#endif  // SRK_VERIFY_HPP_
