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

// Elements of F_q^{n x m} (tuples of matrices), sum-rank weight and distance,
// codes, sphere enumeration, and the map into Hamming space over GF(q^m).

#ifndef SRK_SPACE_HPP_
#define SRK_SPACE_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "srk/counting.hpp"
#include "srk/gf.hpp"
#include "srk/matrix.hpp"
#include "srk/nat.hpp"
#include "srk/params.hpp"

namespace srk {

struct SrkVector {
  std::vector<Matrix> blocks;

  static SrkVector zero(const SrkParams& params) {
    SrkVector x;
    for (int i = 0; i < params.t(); ++i) x.blocks.emplace_back(params.n[i], params.m[i]);
    return x;
  }

  bool conforms_to(const SrkParams& params) const {
    if (static_cast<int>(blocks.size()) != params.t()) return false;
    for (int i = 0; i < params.t(); ++i)
      if (blocks[i].rows() != params.n[i] || blocks[i].cols() != params.m[i]) return false;
    for (const Matrix& b : blocks)
      for (Elem v : b.entries())
        if (static_cast<int>(v) >= params.q()) return false;
    return true;
  }

  // Canonical order: blocks in order, entries row-major.
  friend bool operator==(const SrkVector&, const SrkVector&) = default;
  friend auto operator<=>(const SrkVector& a, const SrkVector& b) { return a.blocks <=> b.blocks; }
};

inline void require_conformant(const SrkParams& params, const SrkVector& x) {
  if (!x.conforms_to(params)) throw Error("element shape does not match " + params.describe());
}

inline SrkVector add(const SrkParams& params, const SrkVector& x, const SrkVector& y) {
  require_conformant(params, x);
  require_conformant(params, y);
  SrkVector out;
  for (int i = 0; i < params.t(); ++i) out.blocks.push_back(add(params.field, x.blocks[i], y.blocks[i]));
  return out;
}

inline SrkVector sub(const SrkParams& params, const SrkVector& x, const SrkVector& y) {
  require_conformant(params, x);
  require_conformant(params, y);
  SrkVector out;
  for (int i = 0; i < params.t(); ++i) out.blocks.push_back(sub(params.field, x.blocks[i], y.blocks[i]));
  return out;
}

inline int srk_weight(const SrkParams& params, const SrkVector& x) {
  require_conformant(params, x);
  int w = 0;
  for (const Matrix& b : x.blocks) w += rank(params.field, b);
  return w;
}

inline int srk_distance(const SrkParams& params, const SrkVector& x, const SrkVector& y) {
  return srk_weight(params, sub(params, x, y));
}

// Flat digit view of a space whose size fits in 64 bits. Elements are indexed
// in canonical lexicographic order; per-block rank tables make weight queries
// a handful of table lookups.
class SrkSpace {
 public:
  static constexpr std::uint64_t kRankTableLimit = std::uint64_t{1} << 22;

  explicit SrkSpace(SrkParams params) : params_(std::move(params)) {
    q_ = params_.q();
    int offset = 0;
    for (int i = 0; i < params_.t(); ++i) {
      Block b;
      b.n = params_.n[i];
      b.m = params_.m[i];
      b.offset = offset;
      offset += b.n * b.m;
      b.size = checked_pow(q_, b.n * b.m);
      if (b.size != 0 && b.size <= kRankTableLimit) {
        b.rank.resize(b.size);
        std::uint64_t idx = 0;
        for (const Matrix& mat : enumerate_matrices(b.n, b.m, params_.field, kRankTableLimit))
          b.rank[idx++] = static_cast<std::uint8_t>(rank(params_.field, mat));
      }
      blocks_.push_back(std::move(b));
    }
    entries_ = offset;
    size_ = checked_pow(q_, entries_);
  }

  const SrkParams& params() const { return params_; }
  int entries() const { return entries_; }
  // Number of elements, or 0 if it does not fit in 64 bits.
  std::uint64_t size() const { return size_; }

  std::vector<Elem> digits_of(std::uint64_t index) const {
    std::vector<Elem> d(entries_);
    for (int k = entries_ - 1; k >= 0; --k) {
      d[k] = static_cast<Elem>(index % q_);
      index /= q_;
    }
    return d;
  }

  std::uint64_t index_of(std::span<const Elem> digits) const {
    std::uint64_t idx = 0;
    for (Elem d : digits) idx = idx * q_ + d;
    return idx;
  }

  std::vector<Elem> digits_of(const SrkVector& x) const {
    require_conformant(params_, x);
    std::vector<Elem> d;
    d.reserve(entries_);
    for (const Matrix& b : x.blocks) d.insert(d.end(), b.entries().begin(), b.entries().end());
    return d;
  }

  SrkVector vector_of(std::span<const Elem> digits) const {
    SrkVector x;
    for (const Block& b : blocks_)
      x.blocks.emplace_back(b.n, b.m,
                            std::vector<Elem>(digits.begin() + b.offset, digits.begin() + b.offset + b.n * b.m));
    return x;
  }

  SrkVector vector_of(std::uint64_t index) const { return vector_of(digits_of(index)); }

  int block_rank(int block, std::span<const Elem> digits) const {
    const Block& b = blocks_[block];
    if (!b.rank.empty()) {
      std::uint64_t idx = 0;
      for (int k = 0; k < b.n * b.m; ++k) idx = idx * q_ + digits[b.offset + k];
      return b.rank[idx];
    }
    return rank(params_.field,
                Matrix(b.n, b.m, std::vector<Elem>(digits.begin() + b.offset, digits.begin() + b.offset + b.n * b.m)));
  }

  int weight(std::span<const Elem> digits) const {
    int w = 0;
    for (int i = 0; i < static_cast<int>(blocks_.size()); ++i) w += block_rank(i, digits);
    return w;
  }

  // srk(x - y); stops early and returns a value > cap once the partial sum
  // exceeds cap.
  int distance(std::span<const Elem> x, std::span<const Elem> y,
               int cap = std::numeric_limits<int>::max()) const {
    const Field& f = params_.field;
    int w = 0;
    for (const Block& b : blocks_) {
      const int len = b.n * b.m;
      if (!b.rank.empty()) {
        std::uint64_t idx = 0;
        for (int k = 0; k < len; ++k) idx = idx * q_ + f.sub(x[b.offset + k], y[b.offset + k]);
        w += b.rank[idx];
      } else {
        Matrix diff(b.n, b.m);
        for (int k = 0; k < len; ++k) diff(k / b.m, k % b.m) = f.sub(x[b.offset + k], y[b.offset + k]);
        w += rank(f, std::move(diff));
      }
      if (w > cap) return w;
    }
    return w;
  }

  void add_into(std::span<const Elem> x, std::span<const Elem> y, std::span<Elem> out) const {
    for (int k = 0; k < entries_; ++k) out[k] = params_.field.add(x[k], y[k]);
  }

  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0, scale = 1;
    for (int k = 0; k < entries_; ++k) {
      out += scale * params_.field.add(static_cast<Elem>(a % q_), static_cast<Elem>(b % q_));
      a /= q_;
      b /= q_;
      scale *= q_;
    }
    return out;
  }

 private:
  struct Block {
    int n = 0, m = 0, offset = 0;
    std::uint64_t size = 0;
    std::vector<std::uint8_t> rank;
  };

  static std::uint64_t checked_pow(int q, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
      if (r > std::numeric_limits<std::uint64_t>::max() / q) return 0;
      r *= q;
    }
    return r;
  }

  SrkParams params_;
  int q_ = 0;
  int entries_ = 0;
  std::uint64_t size_ = 0;
  std::vector<Block> blocks_;
};

inline std::uint64_t require_enumerable(const SrkSpace& space, std::uint64_t budget, const char* what) {
  if (space.size() == 0 || space.size() > budget)
    throw BudgetExceeded(std::string(what) + ": space " + space.params().describe() + " has more than " +
                         std::to_string(budget) + " elements");
  return space.size();
}

// Every element of sum-rank weight exactly w, in canonical order. Built from
// per-block rank classes, so only the blocks need to be enumerable.
inline std::vector<SrkVector> enumerate_sphere(const SrkParams& params, int w,
                                               std::uint64_t budget = kDefaultEnumerationBudget) {
  if (w < 0) return {};
  const std::vector<Nat> dist = weight_distribution(params);
  if (w >= static_cast<int>(dist.size())) return {};
  if (dist[w] > budget)
    throw BudgetExceeded("sphere of radius " + std::to_string(w) + " in " + params.describe() + " has " +
                         dist[w].str() + " elements, over budget");
  // by_rank[i][r]: matrices of block i with rank r.
  std::vector<std::vector<std::vector<Matrix>>> by_rank(params.t());
  for (int i = 0; i < params.t(); ++i) {
    by_rank[i].resize(std::min(params.n[i], params.m[i]) + 1);
    for (const Matrix& mat : enumerate_matrices(params.n[i], params.m[i], params.field)) {
      const int r = rank(params.field, mat);
      if (r <= w) by_rank[i][r].push_back(mat);
    }
  }
  std::vector<SrkVector> out;
  SrkVector cur = SrkVector::zero(params);
  auto rec = [&](auto&& self, int block, int remaining) -> void {
    if (block == params.t()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    const int top = std::min<int>(remaining, static_cast<int>(by_rank[block].size()) - 1);
    for (int r = 0; r <= top; ++r) {
      for (const Matrix& mat : by_rank[block][r]) {
        cur.blocks[block] = mat;
        self(self, block + 1, remaining - r);
      }
    }
  };
  rec(rec, 0, w);
  std::sort(out.begin(), out.end());
  return out;
}

// Elements with 1 <= srk <= k, in canonical order.
inline std::vector<SrkVector> enumerate_punctured_ball(const SrkParams& params, int k,
                                                       std::uint64_t budget = kDefaultEnumerationBudget) {
  std::vector<SrkVector> out;
  for (int w = 1; w <= k; ++w) {
    std::vector<SrkVector> s = enumerate_sphere(params, w, budget);
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Codes

class SrkCode {
 public:
  static SrkCode make(SrkParams params, std::vector<SrkVector> words) {
    if (words.empty()) throw Error("a code must be non-empty");
    for (const SrkVector& w : words) require_conformant(params, w);
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end()) throw Error("code has repeated words");
    SrkCode c(std::move(params), std::move(words));
    c.min_dist_ = c.compute_min_distance();
    return c;
  }

  const SrkParams& params() const { return params_; }
  const std::vector<SrkVector>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  // Absent for single-word codes.
  std::optional<int> cached_min_distance() const { return min_dist_; }

  std::optional<int> compute_min_distance() const {
    if (words_.size() < 2) return std::nullopt;
    SrkSpace space(params_);
    std::vector<std::vector<Elem>> d;
    d.reserve(words_.size());
    for (const SrkVector& w : words_) d.push_back(space.digits_of(w));
    int best = std::numeric_limits<int>::max();
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = a + 1; b < d.size(); ++b) best = std::min(best, space.distance(d[a], d[b], best));
    return best;
  }

 private:
  SrkCode(SrkParams params, std::vector<SrkVector> words) : params_(std::move(params)), words_(std::move(words)) {}

  SrkParams params_;
  std::vector<SrkVector> words_;
  std::optional<int> min_dist_;
};

inline int min_distance(const SrkCode& code) {
  auto d = code.cached_min_distance();
  if (!d) throw Error("minimum distance needs at least two codewords");
  return *d;
}

// Code files: {"q","p","e","n":[...],"m":[...],"words":[[[block entries]...]...]}.
inline nlohmann::json code_to_json(const SrkCode& code) {
  const SrkParams& p = code.params();
  nlohmann::json words = nlohmann::json::array();
  for (const SrkVector& w : code.words()) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const Matrix& b : w.blocks) blocks.push_back(std::vector<int>(b.entries().begin(), b.entries().end()));
    words.push_back(std::move(blocks));
  }
  return {{"q", p.q()}, {"p", p.field.p()}, {"e", p.field.e()}, {"n", p.n}, {"m", p.m}, {"words", std::move(words)}};
}

inline SrkCode code_from_json(const nlohmann::json& j) {
  try {
    const int q = j.at("q").get<int>();
    Field field = Field::make(j.at("p").get<int>(), j.at("e").get<int>());
    if (field.q() != q) throw Error("code file: q does not equal p^e");
    SrkParams params = SrkParams::make(field, j.at("n").get<std::vector<int>>(), j.at("m").get<std::vector<int>>());
    std::vector<SrkVector> words;
    for (const auto& jw : j.at("words")) {
      if (!jw.is_array() || static_cast<int>(jw.size()) != params.t()) throw Error("code file: word has wrong block count");
      SrkVector w;
      for (int i = 0; i < params.t(); ++i) {
        std::vector<Elem> entries;
        for (const auto& e : jw[i]) {
          const int v = e.get<int>();
          if (v < 0 || v >= q) throw Error("code file: entry out of field range");
          entries.push_back(static_cast<Elem>(v));
        }
        w.blocks.emplace_back(params.n[i], params.m[i], std::move(entries));
      }
      words.push_back(std::move(w));
    }
    return SrkCode::make(std::move(params), std::move(words));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("code file: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Hamming bridge

// A vector over GF(q^m). Each entry is the GF(q)-coordinate vector of an
// extension element in the polynomial basis (1, a, ..., a^{m-1}), packed as
// sum_i c_i q^i.
struct HammingVector {
  int q = 0;
  int ext_degree = 0;
  std::vector<std::uint64_t> entries;

  int weight() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](std::uint64_t x) { return x != 0; }));
  }
  friend bool operator==(const HammingVector&, const HammingVector&) = default;
  friend auto operator<=>(const HammingVector&, const HammingVector&) = default;
};

inline std::vector<std::uint64_t> default_basis(int q, int m) {
  std::vector<std::uint64_t> b(m);
  std::uint64_t s = 1;
  for (int i = 0; i < m; ++i, s *= q) b[i] = s;
  return b;
}

namespace internal {

inline std::vector<Elem> ext_coords(std::uint64_t x, int q, int m) {
  std::vector<Elem> c(m);
  for (int i = 0; i < m; ++i) {
    c[i] = static_cast<Elem>(x % q);
    x /= q;
  }
  return c;
}

}  // namespace internal

inline void check_basis(const Field& f, std::span<const std::uint64_t> basis, int m) {
  if (static_cast<int>(basis.size()) != m)
    throw Error("basis must have " + std::to_string(m) + " elements");
  std::uint64_t limit = 1;
  for (int i = 0; i < m; ++i) limit *= f.q();
  Matrix coords(m, m);
  for (int r = 0; r < m; ++r) {
    if (basis[r] >= limit) throw Error("basis element out of range for GF(q^m)");
    const auto c = internal::ext_coords(basis[r], f.q(), m);
    for (int i = 0; i < m; ++i) coords(r, i) = c[i];
  }
  if (rank(f, coords) != m) throw Error("basis is not linearly independent over GF(q)");
}

// Row-wise basis expansion X -> (sum_j X[r][j] b_j)_r, concatenated over
// blocks; blocks narrower than m = max m_i are zero-padded on the right.
inline HammingVector f_map(const SrkParams& params, const SrkVector& x, std::span<const std::uint64_t> basis) {
  require_conformant(params, x);
  const Field& f = params.field;
  const int m = params.max_m();
  check_basis(f, basis, m);
  std::vector<std::vector<Elem>> coords;
  for (std::uint64_t b : basis) coords.push_back(internal::ext_coords(b, f.q(), m));
  HammingVector h{f.q(), m, {}};
  for (const Matrix& blk : x.blocks) {
    for (int r = 0; r < blk.rows(); ++r) {
      std::vector<Elem> acc(m, 0);
      for (int j = 0; j < blk.cols(); ++j) {
        if (blk(r, j) == 0) continue;
        for (int i = 0; i < m; ++i) acc[i] = f.add(acc[i], f.mul(blk(r, j), coords[j][i]));
      }
      std::uint64_t packed = 0;
      for (int i = m - 1; i >= 0; --i) packed = packed * f.q() + acc[i];
      h.entries.push_back(packed);
    }
  }
  return h;
}

inline HammingVector f_map(const SrkParams& params, const SrkVector& x) {
  const auto b = default_basis(params.q(), params.max_m());
  return f_map(params, x, b);
}

struct WeightPreservationReport {
  std::uint64_t elements = 0;
  bool equality_expected = false;  // n = (1,...,1) and all m_i equal
  std::uint64_t inequality_violations = 0;
  std::uint64_t equality_failures = 0;
  bool injective = true;
  std::optional<SrkVector> first_violation;

  bool ok() const { return inequality_violations == 0 && injective && (!equality_expected || equality_failures == 0); }
};

// Checks srk(X) <= wt_H(f(X)) on every element, equality where the space is
// isometric to Hamming space, and injectivity of f.
inline WeightPreservationReport wt_preservation_check(const SrkParams& params,
                                                      std::span<const std::uint64_t> basis = {},
                                                      std::uint64_t budget = kDefaultEnumerationBudget) {
  const SrkSpace space(params);
  const std::uint64_t size = require_enumerable(space, budget, "wt_preservation_check");
  std::vector<std::uint64_t> b(basis.begin(), basis.end());
  if (b.empty()) b = default_basis(params.q(), params.max_m());
  WeightPreservationReport rep;
  rep.equality_expected = std::all_of(params.n.begin(), params.n.end(), [](int x) { return x == 1; }) &&
                          std::all_of(params.m.begin(), params.m.end(), [&](int x) { return x == params.m[0]; });
  std::set<HammingVector> images;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    const SrkVector x = space.vector_of(idx);
    const HammingVector h = f_map(params, x, b);
    const int w = srk_weight(params, x);
    const int hw = h.weight();
    if (w > hw) {
      ++rep.inequality_violations;
      if (!rep.first_violation) rep.first_violation = x;
    }
    if (w != hw) {
      ++rep.equality_failures;
      if (rep.equality_expected && !rep.first_violation) rep.first_violation = x;
    }
    if (!images.insert(h).second) rep.injective = false;
    ++rep.elements;
  }
  return rep;
}

}  // namespace srk

#endif  // SRK_SPACE_HPP_
