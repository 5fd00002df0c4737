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

// Brute-force reference implementations for the tests. Nothing here calls
// the library's elimination, counting or search code; only field arithmetic
// and element indexing are shared.

#ifndef SRK_TESTS_ORACLES_HPP_
#define SRK_TESTS_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "srk/gf.hpp"
#include "srk/matrix.hpp"
#include "srk/params.hpp"

namespace oracle {

using srk::Elem;
using srk::Field;
using srk::Matrix;
using Vec = std::vector<Elem>;

// All vectors in the span of `gens`, as a sorted set.
inline std::set<Vec> span(const Field& f, const std::vector<Vec>& gens, int len) {
  std::set<Vec> out{Vec(len, 0)};
  for (const Vec& g : gens) {
    std::set<Vec> next;
    for (const Vec& v : out)
      for (int a = 0; a < f.q(); ++a) {
        Vec w = v;
        for (int i = 0; i < len; ++i) w[i] = f.add(w[i], f.mul(static_cast<Elem>(a), g[i]));
        next.insert(w);
      }
    out = std::move(next);
  }
  return out;
}

inline int log_q(std::size_t size, int q) {
  int r = 0;
  while (size > 1) size /= q, ++r;
  return r;
}

inline std::vector<Vec> rows_of(const Matrix& m) {
  std::vector<Vec> r(m.rows(), Vec(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

inline std::vector<Vec> cols_of(const Matrix& m) {
  std::vector<Vec> c(m.cols(), Vec(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) c[j][i] = m(i, j);
  return c;
}

// Rank as log_q of the size of the row span.
inline int rank(const Field& f, const Matrix& m) { return log_q(span(f, rows_of(m), m.cols()).size(), f.q()); }

inline int intersection_dim(const Field& f, const std::vector<Vec>& a, const std::vector<Vec>& b, int len) {
  const auto sa = span(f, a, len);
  const auto sb = span(f, b, len);
  std::size_t common = 0;
  for (const Vec& v : sa) common += sb.count(v);
  return log_q(common, f.q());
}

inline int col_cap(const Field& f, const Matrix& x, const Matrix& y) {
  return intersection_dim(f, cols_of(x), cols_of(y), x.rows());
}

inline int row_cap(const Field& f, const Matrix& x, const Matrix& y) {
  return intersection_dim(f, rows_of(x), rows_of(y), x.cols());
}

// Number of k-dimensional subspaces of GF(q)^n, by collecting the spans of
// all k-tuples of vectors.
inline std::uint64_t count_subspaces(const Field& f, int n, int k) {
  std::vector<Vec> all;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= f.q();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec v(n);
    std::uint64_t x = idx;
    for (int i = n - 1; i >= 0; --i) v[i] = static_cast<Elem>(x % f.q()), x /= f.q();
    all.push_back(v);
  }
  std::set<std::set<Vec>> seen;
  std::vector<std::size_t> pick(k, 0);
  std::function<void(int)> rec = [&](int depth) {
    if (depth == k) {
      std::vector<Vec> g;
      for (auto i : pick) g.push_back(all[i]);
      auto s = span(f, g, n);
      if (log_q(s.size(), f.q()) == k) seen.insert(std::move(s));
      return;
    }
    for (std::size_t i = depth ? pick[depth - 1] + 1 : 0; i < all.size(); ++i) {
      pick[depth] = i;
      rec(depth + 1);
    }
  };
  rec(0);
  return seen.size();
}

// Elements of a space as flat entry vectors, indexed like SrkSpace:
// first entry most significant.
inline std::vector<Vec> elements(const srk::SrkParams& p) {
  const int len = p.entries();
  std::uint64_t total = 1;
  for (int i = 0; i < len; ++i) total *= p.q();
  std::vector<Vec> out(total, Vec(len));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (int i = len - 1; i >= 0; --i) out[idx][i] = static_cast<Elem>(x % p.q()), x /= p.q();
  }
  return out;
}

// Sum-rank weight of a flat entry vector using the span rank.
inline int weight(const srk::SrkParams& p, const Vec& v) {
  int w = 0, off = 0;
  for (int b = 0; b < p.t(); ++b) {
    Matrix m(p.n[b], p.m[b]);
    for (int i = 0; i < p.n[b]; ++i)
      for (int j = 0; j < p.m[b]; ++j) m(i, j) = v[off + i * p.m[b] + j];
    off += p.n[b] * p.m[b];
    w += oracle::rank(p.field, m);
  }
  return w;
}

inline Vec diff(const Field& f, const Vec& a, const Vec& b) {
  Vec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = f.sub(a[i], b[i]);
  return d;
}

// Pairwise distance table.
inline std::vector<std::vector<int>> distances(const srk::SrkParams& p) {
  const auto el = elements(p);
  std::vector<std::vector<int>> d(el.size(), std::vector<int>(el.size()));
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = a; b < el.size(); ++b) d[a][b] = d[b][a] = weight(p, diff(p.field, el[a], el[b]));
  return d;
}

// Largest subset with pairwise distance > k, by trying every subset.
inline std::size_t alpha_bruteforce(const srk::SrkParams& p, int k) {
  const auto d = distances(p);
  const std::size_t n = d.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const std::size_t size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (std::size_t b = a + 1; b < n; ++b)
        if (((mask >> b) & 1) && d[a][b] <= k) {
          ok = false;
          break;
        }
    }
    if (ok) best = size;
  }
  return best;
}

// Unordered pairs of distinct nonzero elements with weights and difference
// weight in 1..k.
inline std::uint64_t neighbourhood_edges(const srk::SrkParams& p, int k) {
  const auto el = elements(p);
  std::vector<int> w(el.size());
  for (std::size_t i = 0; i < el.size(); ++i) w[i] = weight(p, el[i]);
  std::uint64_t t = 0;
  for (std::size_t a = 1; a < el.size(); ++a) {
    if (w[a] < 1 || w[a] > k) continue;
    for (std::size_t b = a + 1; b < el.size(); ++b) {
      if (w[b] < 1 || w[b] > k) continue;
      if (weight(p, diff(p.field, el[a], el[b])) <= k) ++t;
    }
  }
  return t;
}

}  // namespace oracle

#endif  // SRK_TESTS_ORACLES_HPP_
