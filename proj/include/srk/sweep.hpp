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

// Parameter sweeps: which (space, d) pairs a report covers, and the driver
// that turns them into rows.

#ifndef SRK_SWEEP_HPP_
#define SRK_SWEEP_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "srk/bounds.hpp"
#include "srk/params.hpp"

namespace srk {

inline constexpr std::uint64_t kDefaultSweepSpace = 1024;

// Every space over GF(q), q in qs, with blocks n_i <= m_i and |V| <= max_space.
// Blocks are listed by non-increasing (n_i, m_i); rows come out ordered by
// q, number of entries, t, then the block lists.
inline std::vector<SrkParams> default_sweep(const std::vector<int>& qs, std::uint64_t max_space = kDefaultSweepSpace) {
  std::vector<SrkParams> out;
  for (int q : qs) {
    const Field field = Field::make_q(q);
    int max_entries = 0;
    for (std::uint64_t s = q; s <= max_space; s *= q) ++max_entries;
    std::vector<std::pair<int, int>> types;  // descending
    for (int n = max_entries; n >= 1; --n)
      for (int m = max_entries; m >= n; --m)
        if (n * m <= max_entries) types.push_back({n, m});
    std::vector<std::pair<int, int>> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int budget) {
      if (!cur.empty()) {
        std::vector<int> n, m;
        for (auto [a, b] : cur) n.push_back(a), m.push_back(b);
        out.push_back(SrkParams::make(field, n, m));
      }
      for (std::size_t i = from; i < types.size(); ++i) {
        const int cost = types[i].first * types[i].second;
        if (cost > budget) continue;
        cur.push_back(types[i]);
        rec(i, budget - cost);
        cur.pop_back();
      }
    };
    rec(0, max_entries);
  }
  std::stable_sort(out.begin(), out.end(), [](const SrkParams& a, const SrkParams& b) {
    return std::make_tuple(a.q(), a.entries(), a.t(), a.n, a.m) < std::make_tuple(b.q(), b.entries(), b.t(), b.n, b.m);
  });
  return out;
}

// "q:n:m", e.g. "2:2,1:2,2".
inline SrkParams parse_instance(const std::string& spec) {
  const auto a = spec.find(':');
  const auto b = spec.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) throw Error("instance must look like q:n1,n2:m1,m2");
  auto list = [](const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw Error("empty entry in list '" + s + "'");
      v.push_back(std::stoi(tok));
    }
    return v;
  };
  return SrkParams::make(Field::make_q(std::stoi(spec.substr(0, a))), list(spec.substr(a + 1, b - a - 1)),
                         list(spec.substr(b + 1)));
}

struct SweepConfig {
  std::vector<int> qs;                // generated spaces over these fields
  std::uint64_t max_space = kDefaultSweepSpace;
  std::vector<SrkParams> instances;   // explicit spaces, after the generated ones
  std::vector<int> ds;                // empty: every d in 1..max weight
  BoundOptions options;
  std::string format = "csv";         // csv | json
  unsigned threads = 0;               // 0: hardware concurrency

  void validate() const {
    if (max_space < 1) throw Error("sweep: max space must be positive");
    if (options.max_vertices < 1 || options.max_ball < 1 || options.node_limit < 1)
      throw Error("sweep: budgets must be positive");
    if (format != "csv" && format != "json") throw Error("sweep: format must be csv or json");
    for (int d : ds)
      if (d < 1) throw Error("sweep: d must be >= 1");
  }

  std::vector<std::pair<SrkParams, int>> rows() const {
    std::vector<SrkParams> spaces = qs.empty() ? std::vector<SrkParams>{} : default_sweep(qs, max_space);
    spaces.insert(spaces.end(), instances.begin(), instances.end());
    std::vector<std::pair<SrkParams, int>> out;
    for (const auto& p : spaces) {
      if (ds.empty()) {
        for (int d = 1; d <= p.max_weight(); ++d) out.emplace_back(p, d);
      } else {
        for (int d : ds)
          if (d <= p.max_weight()) out.emplace_back(p, d);
      }
    }
    return out;
  }
};

// Rows are computed by a pool of workers and written in row order, so the
// output does not depend on the thread count.
inline std::vector<BoundReport> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto rows = cfg.rows();
  std::vector<std::optional<BoundReport>> out(rows.size());
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, rows.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < rows.size();)
        out[i] = bound_report(rows[i].first, rows[i].second, cfg.options);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<BoundReport> reports;
  reports.reserve(out.size());
  for (auto& r : out) reports.push_back(std::move(*r));
  return reports;
}

inline void write_reports(std::ostream& os, const std::vector<BoundReport>& reports, const std::string& format) {
  if (format == "csv") {
    write_csv_header(os);
    for (const auto& r : reports) write_csv_row(os, r);
    return;
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  os << arr.dump(2) << "\n";
}

}  // namespace srk

#endif  // SRK_SWEEP_HPP_
