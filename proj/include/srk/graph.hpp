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

// The radius-k power of the sum-rank graph, handled implicitly through the
// Cayley structure: x ~ y iff 1 <= srk(x - y) <= k. Exact neighbourhood edge
// counts, triangle counts, independence numbers and greedy code partitions.

#ifndef SRK_GRAPH_HPP_
#define SRK_GRAPH_HPP_

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "srk/counting.hpp"
#include "srk/nat.hpp"
#include "srk/space.hpp"

namespace srk {

struct PowerGraphSpec {
  SrkParams params;
  int k = 1;  // radius; k = 0 is the edgeless graph
};

inline constexpr std::uint64_t kDefaultMaxVertices = 4096;
inline constexpr std::uint64_t kDefaultMaxBall = 20000;
inline constexpr std::uint64_t kDefaultNodeLimit = 2000000;
inline constexpr std::uint64_t kAnticodeNodes = 2000;
inline constexpr std::uint64_t kAdditiveNodes = 20000;
inline constexpr int kAdditiveTrials = 200;

// Solver vertex budget, overridable through SRK_MAX_VERTICES.
inline std::uint64_t default_max_vertices() {
  if (const char* env = std::getenv("SRK_MAX_VERTICES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxVertices;
}

struct GraphStats {
  Nat num_vertices;
  Nat D;
  Nat T;
  Nat Delta;
  // nullopt when D < 2; +inf when T = 0.
  std::optional<double> eps_star;
};

enum class OrderPolicy { kLex, kWeightThenLex };

inline OrderPolicy parse_order_policy(const std::string& s) {
  if (s == "lex") return OrderPolicy::kLex;
  if (s == "weight-then-lex") return OrderPolicy::kWeightThenLex;
  throw Error("unknown order policy '" + s + "' (expected lex or weight-then-lex)");
}

namespace internal {

inline void check_radius(const PowerGraphSpec& spec) {
  if (spec.k < 0) throw Error("graph radius must be nonnegative");
}

inline unsigned worker_count(std::uint64_t work) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(hw, std::max<std::uint64_t>(1, work / 256)));
}

// All vertices of an enumerable space as digit rows, plus their weights.
struct VertexTable {
  std::uint64_t size = 0;
  int entries = 0;
  std::vector<Elem> digits;  // size * entries
  std::vector<int> weight;

  VertexTable(const SrkSpace& space, std::uint64_t budget, const char* what) {
    size = require_enumerable(space, budget, what);
    entries = space.entries();
    digits.resize(size * entries);
    weight.resize(size);
    for (std::uint64_t v = 0; v < size; ++v) {
      const auto d = space.digits_of(v);
      std::copy(d.begin(), d.end(), digits.begin() + v * entries);
      weight[v] = space.weight(d);
    }
  }
  std::span<const Elem> row(std::uint64_t v) const { return {digits.data() + v * entries, static_cast<std::size_t>(entries)}; }
};

// Indices of x - y for every y, via the digit tables.
inline std::uint64_t diff_index(const Field& f, int q, std::span<const Elem> x, std::span<const Elem> y) {
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < x.size(); ++k) idx = idx * q + f.sub(x[k], y[k]);
  return idx;
}

inline std::uint64_t sum_index(const Field& f, int q, std::span<const Elem> x, std::span<const Elem> y) {
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < x.size(); ++k) idx = idx * q + f.add(x[k], y[k]);
  return idx;
}

}  // namespace internal

// Fixed-size bitset over vertex slots.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  // Lowest set index, or size() if empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return n_;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  void and_not(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  }
  std::size_t and_count_from(const Bitset& o, std::size_t from) const {
    std::size_t c = 0;
    std::size_t wi = from >> 6;
    if (wi >= w_.size()) return 0;
    c += std::popcount(w_[wi] & o.w_[wi] & (~std::uint64_t{0} << (from & 63)));
    for (std::size_t i = wi + 1; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Number of unordered pairs {x, y} of distinct elements with
// 1 <= srk(x), srk(y), srk(x - y) <= k: the edges inside the neighbourhood of
// any vertex. Direct pair enumeration over the ball.
inline Nat exact_T(const PowerGraphSpec& spec, std::uint64_t max_ball = kDefaultMaxBall) {
  internal::check_radius(spec);
  if (spec.k == 0) return 0;
  const Nat ball = ball_volume(spec.params, spec.k);
  if (ball > max_ball)
    throw BudgetExceeded("ball of radius " + std::to_string(spec.k) + " in " + spec.params.describe() + " has " +
                         ball.str() + " elements, over the pair budget " + std::to_string(max_ball));
  const SrkSpace space(spec.params);
  const std::vector<SrkVector> punctured = enumerate_punctured_ball(spec.params, spec.k, max_ball);
  const std::size_t b = punctured.size();
  const int e = space.entries();
  std::vector<Elem> digits(b * e);
  for (std::size_t i = 0; i < b; ++i) {
    const auto d = space.digits_of(punctured[i]);
    std::copy(d.begin(), d.end(), digits.begin() + i * e);
  }
  auto row = [&](std::size_t i) { return std::span<const Elem>(digits.data() + i * e, e); };
  const unsigned workers = internal::worker_count(b * b / 2);
  std::vector<std::uint64_t> partial(workers, 0);
  auto work = [&](unsigned w) {
    std::uint64_t c = 0;
    for (std::size_t i = w; i < b; i += workers)
      for (std::size_t j = i + 1; j < b; ++j)
        if (space.distance(row(i), row(j), spec.k) <= spec.k) ++c;
    partial[w] = c;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Nat total = 0;
  for (auto c : partial) total += c;
  return total;
}

// Same quantity as exact_T computed from per-block rank-triple profiles.
// For each block shape, pairs (X, Y) are classified by (rk X, rk Y,
// rk(X - Y)) using one canonical X per rank; the profiles are convolved
// across blocks. Cost grows with the block sizes, not with the ball.
inline Nat neighbourhood_edges_by_rank_profile(const PowerGraphSpec& spec,
                                               std::uint64_t block_budget = kDefaultEnumerationBudget) {
  internal::check_radius(spec);
  const int k = spec.k;
  if (k == 0) return 0;
  const SrkParams& params = spec.params;
  const Field& f = params.field;
  const int cap = k + 1;  // weights above k are merged into one bucket
  const int dim = cap + 1;
  auto at = [dim](int a, int b, int c) { return (a * dim + b) * dim + c; };
  std::vector<Nat> acc(dim * dim * dim, 0);
  acc[at(0, 0, 0)] = 1;
  for (int i = 0; i < params.t(); ++i) {
    const int n = params.n[i], m = params.m[i];
    const int rmax = std::min(n, m);
    std::vector<Nat> prof((rmax + 1) * (rmax + 1) * (rmax + 1), 0);
    auto pat = [rmax](int a, int b, int c) { return (a * (rmax + 1) + b) * (rmax + 1) + c; };
    for (int a = 0; a <= rmax; ++a) {
      Matrix x(n, m);
      for (int d = 0; d < a; ++d) x(d, d) = 1;
      std::vector<std::uint64_t> cnt((rmax + 1) * (rmax + 1), 0);
      for (const Matrix& y : enumerate_matrices(n, m, f, block_budget))
        ++cnt[rank(f, y) * (rmax + 1) + rank(f, sub(f, x, y))];
      const Nat mult = count_rank_matrices(n, m, a, f.q());
      for (int b = 0; b <= rmax; ++b)
        for (int c = 0; c <= rmax; ++c) prof[pat(a, b, c)] = mult * cnt[b * (rmax + 1) + c];
    }
    std::vector<Nat> next(acc.size(), 0);
    for (int A = 0; A <= cap; ++A)
      for (int B = 0; B <= cap; ++B)
        for (int C = 0; C <= cap; ++C) {
          const Nat& base = acc[at(A, B, C)];
          if (base == 0) continue;
          for (int a = 0; a <= rmax; ++a)
            for (int b = 0; b <= rmax; ++b)
              for (int c = 0; c <= rmax; ++c) {
                const Nat& p = prof[pat(a, b, c)];
                if (p == 0) continue;
                next[at(std::min(cap, A + a), std::min(cap, B + b), std::min(cap, C + c))] += base * p;
              }
        }
    acc = std::move(next);
  }
  Nat ordered = 0;
  for (int A = 0; A <= k; ++A)
    for (int B = 0; B <= k; ++B)
      for (int C = 0; C <= k; ++C) ordered += acc[at(A, B, C)];
  // Remove pairs with x = 0, y = 0 or x = y (3V - 2 of them), then unorder.
  const Nat v = ball_volume(params, k);
  return exact_div(ordered - 3 * v + 2, 2);
}

inline GraphStats graph_stats(const PowerGraphSpec& spec, std::uint64_t max_ball = kDefaultMaxBall) {
  GraphStats s;
  s.num_vertices = space_size(spec.params);
  s.D = spec.k == 0 ? Nat(0) : degree_D(spec.params, spec.k);
  s.T = exact_T(spec, max_ball);
  const Nat triple = s.T * s.num_vertices;
  if (triple % 3 != 0)
    throw Error("T * |V| = " + triple.str() + " is not divisible by 3; vertex-transitivity violated");
  s.Delta = triple / 3;
  if (s.D >= 2) s.eps_star = epsilon_star(s.D, s.T);
  return s;
}

// Total triangles by explicit adjacency bitsets. Independent of the
// transitivity identity; used to check it.
inline Nat count_triangles_bruteforce(const PowerGraphSpec& spec, std::uint64_t max_vertices = kDefaultMaxVertices) {
  internal::check_radius(spec);
  const SrkSpace space(spec.params);
  const internal::VertexTable vt(space, max_vertices, "count_triangles_bruteforce");
  const Field& f = spec.params.field;
  const int q = spec.params.q();
  std::vector<Bitset> adj(vt.size, Bitset(vt.size));
  for (std::uint64_t u = 0; u < vt.size; ++u)
    for (std::uint64_t v = u + 1; v < vt.size; ++v) {
      const int d = vt.weight[internal::diff_index(f, q, vt.row(u), vt.row(v))];
      if (d >= 1 && d <= spec.k) {
        adj[u].set(v);
        adj[v].set(u);
      }
    }
  std::uint64_t tri = 0;
  for (std::uint64_t u = 0; u < vt.size; ++u)
    for (std::uint64_t v = u + 1; v < vt.size; ++v)
      if (adj[u].test(v)) tri += adj[u].and_count_from(adj[v], v + 1);
  return tri;
}

struct CayleyReport {
  std::uint64_t vertices_checked = 0;
  Nat expected_degree;
  std::uint64_t degree_violations = 0;
  std::uint64_t translation_checks = 0;
  std::uint64_t translation_violations = 0;
  std::optional<std::uint64_t> first_bad_vertex;

  bool ok() const { return degree_violations == 0 && translation_violations == 0; }
};

// Degree check for every radius 0..max_weight at once: each checked vertex
// gets a full distance histogram. Vertices are all of V when
// |V| <= sample_size, else a seeded sample.
inline std::vector<CayleyReport> verify_cayley_all_radii(const SrkParams& params, std::uint64_t sample_size,
                                                         std::uint64_t seed = 1,
                                                         std::uint64_t max_vertices = 1 << 16) {
  const SrkSpace space(params);
  const internal::VertexTable vt(space, max_vertices, "verify_cayley");
  const Field& f = params.field;
  const int q = params.q();
  const int wmax = params.max_weight();
  std::vector<CayleyReport> reps(wmax + 1);
  std::vector<Nat> ball(wmax + 1);
  for (int k = 0; k <= wmax; ++k) {
    reps[k].expected_degree = ball_volume(params, k) - 1;
    ball[k] = reps[k].expected_degree;
  }
  std::vector<std::uint64_t> vertices;
  std::mt19937_64 rng(seed);
  if (vt.size <= sample_size) {
    for (std::uint64_t v = 0; v < vt.size; ++v) vertices.push_back(v);
  } else {
    std::uniform_int_distribution<std::uint64_t> pick(0, vt.size - 1);
    for (std::uint64_t i = 0; i < sample_size; ++i) vertices.push_back(pick(rng));
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, vt.size - 1);
  std::vector<std::uint64_t> hist(wmax + 1);
  for (std::uint64_t v : vertices) {
    std::fill(hist.begin(), hist.end(), 0);
    for (std::uint64_t u = 0; u < vt.size; ++u) ++hist[vt.weight[internal::diff_index(f, q, vt.row(u), vt.row(v))]];
    std::uint64_t cum = 0;
    for (int k = 0; k <= wmax; ++k) {
      if (k >= 1) cum += hist[k];
      ++reps[k].vertices_checked;
      if (Nat(cum) != ball[k]) {
        ++reps[k].degree_violations;
        if (!reps[k].first_bad_vertex) reps[k].first_bad_vertex = v;
      }
    }
    // Translation invariance of the distance, including the trivial shift.
    const std::uint64_t y = pick(rng);
    for (std::uint64_t z : {std::uint64_t{0}, pick(rng)}) {
      const std::uint64_t vz = internal::sum_index(f, q, vt.row(v), vt.row(z));
      const std::uint64_t yz = internal::sum_index(f, q, vt.row(y), vt.row(z));
      const int d0 = vt.weight[internal::diff_index(f, q, vt.row(v), vt.row(y))];
      const int d1 = vt.weight[internal::diff_index(f, q, vt.row(vz), vt.row(yz))];
      for (int k = 0; k <= wmax; ++k) {
        ++reps[k].translation_checks;
        const bool a0 = d0 >= 1 && d0 <= k, a1 = d1 >= 1 && d1 <= k;
        if (a0 != a1) {
          ++reps[k].translation_violations;
          if (!reps[k].first_bad_vertex) reps[k].first_bad_vertex = v;
        }
      }
    }
  }
  return reps;
}

inline CayleyReport verify_cayley(const PowerGraphSpec& spec, std::uint64_t sample_size, std::uint64_t seed = 1,
                                  std::uint64_t max_vertices = 1 << 16) {
  internal::check_radius(spec);
  auto reps = verify_cayley_all_radii(spec.params, sample_size, seed, max_vertices);
  const int k = std::min(spec.k, spec.params.max_weight());
  CayleyReport r = reps[k];
  if (spec.k > k) r.expected_degree = ball_volume(spec.params, spec.k) - 1;
  return r;
}

namespace internal {

// Punctured ball as vertex indices.
inline std::vector<std::uint64_t> connecting_set(const VertexTable& vt, int k) {
  std::vector<std::uint64_t> s;
  for (std::uint64_t v = 0; v < vt.size; ++v)
    if (vt.weight[v] >= 1 && vt.weight[v] <= k) s.push_back(v);
  return s;
}

inline std::vector<std::uint64_t> vertex_order(const VertexTable& vt, OrderPolicy policy) {
  std::vector<std::uint64_t> order(vt.size);
  for (std::uint64_t v = 0; v < vt.size; ++v) order[v] = v;
  if (policy == OrderPolicy::kWeightThenLex)
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint64_t a, std::uint64_t b) { return vt.weight[a] < vt.weight[b]; });
  return order;
}

inline SrkCode code_from_indices(const SrkSpace& space, const std::vector<std::uint64_t>& idx) {
  std::vector<SrkVector> words;
  words.reserve(idx.size());
  for (std::uint64_t v : idx) words.push_back(space.vector_of(v));
  return SrkCode::make(space.params(), std::move(words));
}

inline std::vector<std::uint64_t> greedy_code_indices(const SrkSpace& space, const VertexTable& vt, int k,
                                                      OrderPolicy policy) {
  const Field& f = space.params().field;
  const int q = space.params().q();
  const auto conn = connecting_set(vt, k);
  std::vector<char> blocked(vt.size, 0);
  std::vector<std::uint64_t> kept;
  for (std::uint64_t v : vertex_order(vt, policy)) {
    if (blocked[v]) continue;
    kept.push_back(v);
    for (std::uint64_t s : conn) blocked[sum_index(f, q, vt.row(v), vt.row(s))] = 1;
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace internal

// Keeps each vertex (in the given order) that is at distance > k from every
// vertex kept so far. The result is maximal, so it meets the sphere-covering
// bound |V| / V(k).
inline SrkCode greedy_gv_code(const PowerGraphSpec& spec, OrderPolicy policy = OrderPolicy::kLex,
                              std::uint64_t max_vertices = default_max_vertices()) {
  internal::check_radius(spec);
  const SrkSpace space(spec.params);
  const internal::VertexTable vt(space, max_vertices, "greedy_gv_code");
  return internal::code_from_indices(space, internal::greedy_code_indices(space, vt, spec.k, policy));
}

// First-fit colouring of the power graph; each colour class is a code with
// minimum distance >= k + 1. Uses at most D + 1 classes.
inline std::vector<SrkCode> greedy_partition(const PowerGraphSpec& spec, OrderPolicy policy = OrderPolicy::kLex,
                                             std::uint64_t max_vertices = default_max_vertices()) {
  internal::check_radius(spec);
  const SrkSpace space(spec.params);
  const internal::VertexTable vt(space, max_vertices, "greedy_partition");
  const Field& f = spec.params.field;
  const int q = spec.params.q();
  const auto conn = internal::connecting_set(vt, spec.k);
  constexpr int kUncoloured = -1;
  std::vector<int> colour(vt.size, kUncoloured);
  std::vector<std::uint64_t> stamp(conn.size() + 2, 0);
  std::uint64_t tick = 0;
  int classes = 0;
  for (std::uint64_t v : internal::vertex_order(vt, policy)) {
    ++tick;
    for (std::uint64_t s : conn) {
      const int c = colour[internal::sum_index(f, q, vt.row(v), vt.row(s))];
      if (c != kUncoloured) stamp[c] = tick;
    }
    int c = 0;
    while (stamp[c] == tick) ++c;
    colour[v] = c;
    classes = std::max(classes, c + 1);
  }
  std::vector<std::vector<std::uint64_t>> members(classes);
  for (std::uint64_t v = 0; v < vt.size; ++v) members[colour[v]].push_back(v);
  std::vector<SrkCode> out;
  out.reserve(classes);
  for (const auto& m : members) out.push_back(internal::code_from_indices(space, m));
  return out;
}

struct MisOptions {
  std::uint64_t max_vertices = default_max_vertices();
  std::uint64_t node_limit = kDefaultNodeLimit;
};

struct MisResult {
  Nat size;
  SrkCode witness;
  std::uint64_t nodes = 0;
  Nat upper_bound;  // best a-priori bound used to stop the search
};

namespace internal {

// Maximum clique by branch and bound with greedy colouring bounds over
// bitsets. Vertices are relabelled by a degeneracy ordering.
class CliqueSolver {
 public:
  CliqueSolver(std::vector<Bitset> adj, std::uint64_t node_limit) : n_(adj.size()), node_limit_(node_limit) {
    // Degeneracy ordering: repeatedly drop a minimum-degree vertex (lowest
    // index on ties); the last removed vertices come first.
    std::vector<std::size_t> deg(n_);
    for (std::size_t v = 0; v < n_; ++v) deg[v] = adj[v].count();
    std::vector<char> gone(n_, 0);
    std::vector<std::size_t> removal;
    removal.reserve(n_);
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = n_;
      for (std::size_t v = 0; v < n_; ++v)
        if (!gone[v] && (best == n_ || deg[v] < deg[best])) best = v;
      gone[best] = 1;
      removal.push_back(best);
      for (std::size_t u = 0; u < n_; ++u)
        if (!gone[u] && adj[best].test(u)) --deg[u];
    }
    label_.assign(removal.rbegin(), removal.rend());
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[label_[i]] = i;
    adj_.assign(n_, Bitset(n_));
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t u = 0; u < n_; ++u)
        if (adj[v].test(u)) adj_[pos[v]].set(pos[u]);
  }

  // Returns a maximum clique (original labels) if larger than `initial`.
  // The search stops as soon as a clique of size `target` is found.
  std::vector<std::size_t> solve(std::size_t initial, std::size_t target = SIZE_MAX) {
    best_size_ = initial;
    target_ = target;
    if (best_size_ >= target_) return {};
    best_.clear();
    Bitset all(n_);
    for (std::size_t v = 0; v < n_; ++v) all.set(v);
    if (n_ > 0) expand(all);
    std::vector<std::size_t> out;
    for (std::size_t v : best_) out.push_back(label_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(Bitset p) {
    if (++nodes_ > node_limit_) throw BudgetExceeded("clique search exceeded node limit " + std::to_string(node_limit_));
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    Bitset uncoloured = p;
    std::size_t colour = 0;
    while (!uncoloured.none()) {
      ++colour;
      Bitset avail = uncoloured;
      while (!avail.none()) {
        const std::size_t v = avail.first();
        avail.reset(v);
        uncoloured.reset(v);
        avail.and_not(adj_[v]);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_size_ || best_size_ >= target_) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bitset next = p;
      next &= adj_[v];
      if (next.none()) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  std::size_t n_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> label_;
  std::vector<Bitset> adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = 0;
  std::size_t target_ = SIZE_MAX;
};

// A clique of the power graph through 0: vertices of the punctured ball with
// pairwise distance <= k. Seeds with the subspace anticode (matrices whose
// column spaces sit in fixed subspaces of total dimension k) and grows it by
// a short clique search.
inline std::uint64_t anticode_size(const SrkSpace& space, const VertexTable& vt, int k, std::uint64_t node_limit) {
  const SrkParams& p = space.params();
  std::vector<int> order(p.t());
  for (int i = 0; i < p.t(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p.m[a] > p.m[b]; });
  int left = k, exponent = 0;
  for (int i : order) {
    const int take = std::min(left, p.n[i]);
    exponent += take * p.m[i];
    left -= take;
  }
  std::uint64_t best = 1;
  for (int i = 0; i < exponent; ++i) best *= p.q();
  const auto ball = connecting_set(vt, k);
  if (ball.size() > 4096) return best;
  const Field& f = p.field;
  const int q = p.q();
  std::vector<Bitset> adj(ball.size(), Bitset(ball.size()));
  for (std::size_t a = 0; a < ball.size(); ++a)
    for (std::size_t b = a + 1; b < ball.size(); ++b)
      if (vt.weight[diff_index(f, q, vt.row(ball[a]), vt.row(ball[b]))] <= k) {
        adj[a].set(b);
        adj[b].set(a);
      }
  CliqueSolver solver(std::move(adj), node_limit);
  try {
    const auto c = solver.solve(best - 1);
    if (!c.empty()) best = c.size() + 1;
  } catch (const BudgetExceeded&) {
  }
  return best;
}

// Ratio bound |V| (-lmin) / (D - lmin). For a Cayley graph on (GF(p)^N, +)
// the eigenvalues are the character sums over the connecting set. Only used
// over prime fields.
inline std::optional<std::uint64_t> hoffman_bound(const SrkSpace& space, const VertexTable& vt, int k) {
  const SrkParams& p = space.params();
  if (p.field.e() != 1) return std::nullopt;
  const int q = p.q();
  const auto conn = connecting_set(vt, k);
  std::vector<double> cosines(q);
  for (int i = 0; i < q; ++i) cosines[i] = std::cos(2 * std::numbers::pi * i / q);
  double lmin = 0;
  for (std::uint64_t a = 1; a < vt.size; ++a) {
    const auto ra = vt.row(a);
    double sum = 0;
    for (std::uint64_t s : conn) {
      const auto rs = vt.row(s);
      int dot = 0;
      for (int j = 0; j < vt.entries; ++j) dot += ra[j] * rs[j];
      sum += cosines[dot % q];
    }
    lmin = std::min(lmin, sum);
  }
  if (lmin >= 0) return std::nullopt;
  const double D = static_cast<double>(conn.size());
  const double bound = static_cast<double>(vt.size) * -lmin / (D - lmin);
  return static_cast<std::uint64_t>(std::floor(bound + 1e-9));
}

}  // namespace internal

namespace internal {

// One vertex per orbit of the isometries fixing 0 (GL x GL on each block,
// permutations of equal-shape blocks): diagonal blocks with the given ranks.
// Returned as (weight, index), lightest first.
inline std::vector<std::pair<int, std::uint64_t>> rank_profile_representatives(const SrkSpace& space, int min_weight) {
  const SrkParams& p = space.params();
  std::vector<std::pair<int, std::uint64_t>> out;
  std::vector<int> ranks(p.t(), 0);
  auto rec = [&](auto&& self, int block) -> void {
    if (block == p.t()) {
      int w = 0;
      for (int r : ranks) w += r;
      if (w < min_weight) return;
      SrkVector v = SrkVector::zero(p);
      for (int i = 0; i < p.t(); ++i)
        for (int a = 0; a < ranks[i]; ++a) v.blocks[i](a, a) = 1;
      out.emplace_back(w, space.index_of(space.digits_of(v)));
      return;
    }
    // Equal-shape neighbours get non-increasing ranks.
    int top = std::min(p.n[block], p.m[block]);
    if (block > 0 && p.n[block] == p.n[block - 1] && p.m[block] == p.m[block - 1]) top = ranks[block - 1];
    for (int r = 0; r <= top; ++r) {
      ranks[block] = r;
      self(self, block + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// An additive code (closed under +) with all nonzero weights > k, found by
// a bounded depth-first search over generators in index order. Only a
// source of good incumbents; the result need not be optimal.
inline std::vector<std::uint64_t> additive_code_search(const SrkSpace& space, const VertexTable& vt, int k,
                                                       std::size_t target, std::uint64_t node_limit) {
  const Field& f = space.params().field;
  const int q = space.params().q();
  const int p = f.p();
  std::vector<std::uint64_t> best{0};
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, const std::vector<std::uint64_t>& members, std::uint64_t from) -> void {
    if (members.size() > best.size()) best = members;
    for (std::uint64_t g = from; g < vt.size; ++g) {
      if (best.size() >= target || ++nodes > node_limit) return;
      if (vt.weight[g] <= k) continue;
      // Cosets s + a g for a = 1..p-1.
      std::vector<std::uint64_t> grown = members;
      bool ok = true;
      std::vector<std::uint64_t> mult{g};
      for (int a = 2; a < p; ++a) mult.push_back(sum_index(f, q, vt.row(mult.back()), vt.row(g)));
      for (std::uint64_t m : mult) {
        for (std::uint64_t s : members) {
          const std::uint64_t x = sum_index(f, q, vt.row(s), vt.row(m));
          if (vt.weight[x] <= k) {
            ok = false;
            break;
          }
          grown.push_back(x);
        }
        if (!ok) break;
      }
      if (!ok) continue;
      self(self, grown, g + 1);
    }
  };
  rec(rec, best, 1);
  // Randomised greedy builds, fixed seed.
  std::mt19937_64 rng(0x5eed);
  std::vector<std::uint64_t> order(vt.size - 1);
  std::iota(order.begin(), order.end(), std::uint64_t{1});
  for (int trial = 0; trial < kAdditiveTrials && best.size() < target; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::uint64_t> members{0};
    std::vector<char> in(vt.size, 0);
    in[0] = 1;
    for (std::uint64_t g : order) {
      if (in[g] || vt.weight[g] <= k) continue;
      std::vector<std::uint64_t> grown;
      bool ok = true;
      std::uint64_t m = g;
      for (int a = 1; a < p && ok; ++a) {
        for (std::uint64_t s : members) {
          const std::uint64_t x = sum_index(f, q, vt.row(s), vt.row(m));
          if (vt.weight[x] <= k) {
            ok = false;
            break;
          }
          grown.push_back(x);
        }
        m = sum_index(f, q, vt.row(m), vt.row(g));
      }
      if (!ok) continue;
      for (std::uint64_t x : grown) in[x] = 1;
      members.insert(members.end(), grown.begin(), grown.end());
    }
    if (members.size() > best.size()) best = std::move(members);
  }
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace internal

// Exact independence number of the radius-k power graph, i.e. the largest
// code with minimum distance >= k + 1.
//
// Any code of size >= 2 can be translated and mapped by an isometry so that
// it contains 0 and a rank-profile representative r realising its minimum
// distance w; every other word is then at distance >= w from 0, r and each
// other. The search runs one clique problem per representative. Vertex
// transitivity also gives alpha * omega <= |V|, which together with the
// ratio bound stops the search once the incumbent meets it.
inline MisResult max_independent_set(const PowerGraphSpec& spec, const MisOptions& opt = {}) {
  internal::check_radius(spec);
  const SrkSpace space(spec.params);
  const internal::VertexTable vt(space, opt.max_vertices, "max_independent_set");
  std::vector<std::uint64_t> best = internal::greedy_code_indices(space, vt, spec.k, OrderPolicy::kLex);
  if (spec.k == 0) return {Nat(vt.size), internal::code_from_indices(space, best), 0, Nat(vt.size)};
  std::uint64_t ub = vt.size / internal::anticode_size(space, vt, spec.k, kAnticodeNodes);
  if (const auto h = internal::hoffman_bound(space, vt, spec.k)) ub = std::min(ub, *h);
  if (best.size() < ub) {
    auto additive = internal::additive_code_search(space, vt, spec.k, ub, kAdditiveNodes);
    if (additive.size() > best.size()) best = std::move(additive);
  }
  const Field& f = spec.params.field;
  const int q = spec.params.q();
  std::uint64_t nodes = 0;
  int anticode_radius = spec.k;
  std::uint64_t radius_ub = ub;
  for (const auto& [w, r] : internal::rank_profile_representatives(space, spec.k + 1)) {
    if (best.size() >= ub) break;
    // Codes with minimum distance w are codes of the radius w-1 graph.
    if (w - 1 > anticode_radius) {
      anticode_radius = w - 1;
      radius_ub = std::min(radius_ub, vt.size / internal::anticode_size(space, vt, anticode_radius, kAnticodeNodes));
    }
    if (radius_ub <= best.size()) break;
    std::vector<std::uint64_t> cand;
    for (std::uint64_t v = 1; v < vt.size; ++v)
      if (v != r && vt.weight[v] >= w && vt.weight[internal::diff_index(f, q, vt.row(v), vt.row(r))] >= w)
        cand.push_back(v);
    if (cand.size() + 2 <= best.size()) continue;
    std::vector<Bitset> adj(cand.size(), Bitset(cand.size()));
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = a + 1; b < cand.size(); ++b)
        if (vt.weight[internal::diff_index(f, q, vt.row(cand[a]), vt.row(cand[b]))] >= w) {
          adj[a].set(b);
          adj[b].set(a);
        }
    if (nodes >= opt.node_limit)
      throw BudgetExceeded("clique search exceeded node limit " + std::to_string(opt.node_limit));
    internal::CliqueSolver solver(std::move(adj), opt.node_limit - nodes);
    try {
      const auto clique = solver.solve(best.size() >= 2 ? best.size() - 2 : 0, std::min(ub, radius_ub) - 2);
      if (!clique.empty()) {
        best = {0, r};
        for (std::size_t i : clique) best.push_back(cand[i]);
        std::sort(best.begin(), best.end());
      }
    } catch (const BudgetExceeded&) {
      throw BudgetExceeded("clique search exceeded node limit " + std::to_string(opt.node_limit));
    }
    nodes += solver.nodes();
  }
  return {Nat(best.size()), internal::code_from_indices(space, best), nodes, Nat(ub)};
}

}  // namespace srk

#endif  // SRK_GRAPH_HPP_
