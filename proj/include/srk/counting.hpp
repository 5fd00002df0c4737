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

// Closed-form counts over GF(q): Gaussian binomials, matrices of given rank,
// sum-rank ball volumes, and the pair-count quantities used to bound the
// number of edges inside a neighbourhood of the power graph.
//
// Every count is exact. The only floating-point value is epsilon_star().

#ifndef SRK_COUNTING_HPP_
#define SRK_COUNTING_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "srk/nat.hpp"
#include "srk/params.hpp"

namespace srk {

// Number of k-dimensional subspaces of GF(q)^n.
inline Nat gaussian_binomial(int n, int k, std::int64_t q) {
  if (k < 0 || n < 0 || q < 2) throw Error("gaussian_binomial: invalid arguments");
  if (k > n) return 0;
  Nat num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= nat_pow(q, n - i) - 1;
    den *= nat_pow(q, i + 1) - 1;
  }
  return exact_div(num, den);
}

// n x m matrices of rank r: [n r]_q * prod_{i<r} (q^m - q^i).
inline Nat count_rank_matrices(int n, int m, int r, std::int64_t q) {
  if (r < 0) throw Error("count_rank_matrices: negative rank");
  if (r > std::min(n, m)) return 0;
  Nat prod = 1;
  for (int i = 0; i < r; ++i) prod *= nat_pow(q, m) - nat_pow(q, i);
  return gaussian_binomial(n, r, q) * prod;
}

// Square n x n matrices of rank k via prod_{l<k} (q^n - q^l)^2 / (q^k - q^l).
inline Nat square_rank_count(int n, int k, std::int64_t q) {
  if (k < 0 || k > n) throw Error("square_rank_count: rank out of range");
  Nat num = 1, den = 1;
  for (int l = 0; l < k; ++l) {
    const Nat a = nat_pow(q, n) - nat_pow(q, l);
    num *= a * a;
    den *= nat_pow(q, k) - nat_pow(q, l);
  }
  return exact_div(num, den);
}

struct RankDistribution {
  int n = 0;
  int m = 0;
  std::vector<Nat> counts;  // counts[r] = #matrices of rank r
};

inline RankDistribution rank_distribution(int n, int m, std::int64_t q) {
  RankDistribution d{n, m, {}};
  for (int r = 0; r <= std::min(n, m); ++r) d.counts.push_back(count_rank_matrices(n, m, r, q));
  return d;
}

// out[w] = number of elements of sum-rank weight exactly w.
inline std::vector<Nat> weight_distribution(const SrkParams& params) {
  std::vector<Nat> acc{1};
  for (int i = 0; i < params.t(); ++i) {
    const RankDistribution block = rank_distribution(params.n[i], params.m[i], params.q());
    std::vector<Nat> next(acc.size() + block.counts.size() - 1, 0);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < block.counts.size(); ++b) next[a + b] += acc[a] * block.counts[b];
    acc = std::move(next);
  }
  return acc;
}

inline Nat space_size(const SrkParams& params) { return nat_pow(params.q(), params.entries()); }

inline Nat ball_volume(const SrkParams& params, int k) {
  if (k < 0) throw Error("ball_volume: negative radius");
  const std::vector<Nat> dist = weight_distribution(params);
  Nat total = 0;
  for (int w = 0; w <= k && w < static_cast<int>(dist.size()); ++w) total += dist[w];
  return total;
}

// Degree of the vertex-transitive power graph: the punctured ball.
inline Nat degree_D(const SrkParams& params, int k) { return ball_volume(params, k) - 1; }

// Number of j-dimensional V <= GF(q)^n with dim(U ∩ V) = c for a fixed
// i-dimensional U.
inline Nat subspace_intersection_count(int n, int i, int j, int c, std::int64_t q) {
  if (c < 0 || i < 0 || j < 0 || i > n || j > n || c > std::min(i, j))
    throw Error("subspace_intersection_count: need 0 <= c <= min(i,j) and i,j <= n");
  return nat_pow(q, static_cast<std::int64_t>(i - c) * (j - c)) * gaussian_binomial(i, c, q) *
         gaussian_binomial(n - i, j - c, q);
}

// Rank-j n x n matrices Y whose column space meets col(X) in dimension c,
// for a fixed rank-i X.
inline Nat q_closed(int i, int j, int c, int n, std::int64_t q) {
  if (c > j) throw Error("q_closed: c > j");
  if (c < 0 || j > n || i < 0 || i > n) throw Error("q_closed: need 0 <= c <= j <= n and 0 <= i <= n");
  if (c > i || j - c > n - i) return 0;
  Nat prod = 1;
  for (int l = 0; l < j; ++l) prod *= nat_pow(q, n) - nat_pow(q, l);
  return subspace_intersection_count(n, i, j, c, q) * prod;
}

// M(i) * 2 * sum_{c >= ceil((i+j-k)/2)}^{j} Q(i,j,c); bounds the ordered
// pairs with ranks (i, j) and difference rank at most k.
inline Nat p_upper(int i, int j, int k, int n, std::int64_t q) {
  if (j > i) throw Error("p_upper: requires i >= j");
  if (i + j < k) throw Error("p_upper: requires i + j >= k");
  if (i > n) throw Error("p_upper: rank exceeds n");
  const int lo = std::max(0, (i + j - k + 1) / 2);
  Nat sum = 0;
  for (int c = lo; c <= j; ++c) sum += q_closed(i, j, c, n, q);
  return square_rank_count(n, i, q) * 2 * sum;
}

// Upper bound on the edges inside a neighbourhood of the radius-k power
// graph, for spaces whose first block is square. Terms with i + j < k use
// the trivial pair count M(i) * M(j).
inline Nat t_upper(const SrkParams& params, int k) {
  const int n = params.n[0];
  if (params.m[0] != n) throw Error("t_upper: leading block is not square");
  if (k < 1 || k > n) throw Error("t_upper: requires 1 <= k <= n_1");
  const std::int64_t q = params.q();
  int tail = 0;
  for (int l = 1; l < params.t(); ++l) tail += params.n[l] * params.m[l];
  Nat sum = 0;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= i; ++j) {
      if (i + j >= k)
        sum += p_upper(i, j, k, n, q);
      else
        sum += square_rank_count(n, i, q) * square_rank_count(n, j, q);
    }
  }
  return 2 * nat_pow(q, 2 * static_cast<std::int64_t>(tail)) * sum;
}

// Largest eps with T = D^(2 - eps), i.e. 2 - ln T / ln D. Returns +inf for
// a triangle-free neighbourhood (T = 0).
inline double epsilon_star(const Nat& D, const Nat& T) {
  if (D < 2) throw Error("epsilon_star: requires D >= 2");
  if (T == 0) return std::numeric_limits<double>::infinity();
  return 2.0 - log2_nat(T) / log2_nat(D);
}

}  // namespace srk

#endif  // SRK_COUNTING_HPP_
