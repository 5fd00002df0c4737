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

#ifndef SRK_PARAMS_HPP_
#define SRK_PARAMS_HPP_

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "srk/gf.hpp"

namespace srk {

// Shape of the ambient space F_q^{n x m}: block i is n[i] x m[i].
struct SrkParams {
  Field field;
  std::vector<int> n;
  std::vector<int> m;

  static SrkParams make(Field field, std::vector<int> n, std::vector<int> m) {
    if (n.empty() || n.size() != m.size())
      throw Error("n and m must be non-empty tuples of equal length");
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] < 1 || m[i] < 1) throw Error("block dimensions must be positive");
      if (m[i] < n[i])
        throw Error("block " + std::to_string(i + 1) + " has m_i = " + std::to_string(m[i]) + " < n_i = " +
                    std::to_string(n[i]) + "; blocks must satisfy m_i >= n_i (transpose the block)");
    }
    return SrkParams{std::move(field), std::move(n), std::move(m)};
  }

  int q() const { return field.q(); }
  int t() const { return static_cast<int>(n.size()); }
  // Sum of n_i * m_i: the space has q^entries() elements.
  int entries() const {
    int s = 0;
    for (int i = 0; i < t(); ++i) s += n[i] * m[i];
    return s;
  }
  // Largest possible sum-rank weight, also the Hamming length N.
  int max_weight() const { return std::accumulate(n.begin(), n.end(), 0); }
  int hamming_length() const { return max_weight(); }
  int max_m() const { return *std::max_element(m.begin(), m.end()); }
  int min_m() const { return *std::min_element(m.begin(), m.end()); }

  std::string describe() const {
    auto join = [](const std::vector<int>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s;
    };
    return "q=" + std::to_string(q()) + " n=(" + join(n) + ") m=(" + join(m) + ")";
  }
};

inline bool operator==(const SrkParams& a, const SrkParams& b) {
  return a.field == b.field && a.n == b.n && a.m == b.m;
}

}  // namespace srk

#endif  // SRK_PARAMS_HPP_
