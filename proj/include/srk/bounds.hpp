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

// Lower-bound formulas evaluated at concrete parameters, and the per-(space, d)
// report that puts them next to exact and constructive values.

#ifndef SRK_BOUNDS_HPP_
#define SRK_BOUNDS_HPP_

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "srk/counting.hpp"
#include "srk/graph.hpp"
#include "srk/nat.hpp"
#include "srk/params.hpp"

namespace srk {

// |V| / V(d - 1) as an exact fraction.
inline Rational gv_ratio(const SrkParams& params, int d) {
  if (d < 1) throw Error("gv: distance must be >= 1");
  return Rational::make(space_size(params), ball_volume(params, d - 1));
}

// Sphere-covering lower bound on the largest code with distance >= d,
// rounded up since code sizes are integers.
inline Nat gv_lower(const SrkParams& params, int d) { return gv_ratio(params, d).ceil(); }

struct AksValue {
  double value = 0;
  bool triangle_free = false;  // Delta = 0: the log(Delta/|V|) term is dropped
};

// |V| / (10 D) * (log2 D - log2(Delta / |V|) / 2).
inline AksValue aks_alpha_lower(const Nat& num_vertices, const Nat& D, const Nat& Delta) {
  if (D < 1) throw Error("aks_alpha_lower: requires D >= 1");
  const double scale = std::exp2(log2_nat(num_vertices) - log2_nat(D)) / 10.0;
  const double log_d = log2_nat(D);
  if (Delta == 0) return {scale * log_d, true};
  return {scale * (log_d - 0.5 * (log2_nat(Delta) - log2_nat(num_vertices))), false};
}

// eps * |V| / (20 D) * log2 D for a caller-chosen 0 < eps <= 2.
inline double improved_gv_value(double eps, const Nat& num_vertices, const Nat& D) {
  if (!(eps > 0 && eps <= 2)) throw Error("improved_gv_value: eps must lie in (0, 2]");
  if (D < 1) throw Error("improved_gv_value: requires D >= 1");
  return eps * std::exp2(log2_nat(num_vertices) - log2_nat(D)) / 20.0 * log2_nat(D);
}

struct BoundOptions {
  std::uint64_t max_vertices = default_max_vertices();
  std::uint64_t max_ball = kDefaultMaxBall;
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::optional<double> eps;  // for improved_gv
  OrderPolicy order = OrderPolicy::kLex;
  bool compute_alpha = true;
};

struct BoundReport {
  SrkParams params;
  int d = 1;
  Nat V;
  Nat ball;  // V(d - 1)
  Nat gv;
  Rational gv_ratio;
  std::optional<Nat> greedy;
  std::optional<Nat> alpha;
  std::optional<Nat> classes;
  std::optional<double> avg_class;
  Nat D;
  std::optional<Nat> T;
  std::optional<Nat> Delta;
  std::optional<double> eps_star;  // absent when D < 2 or T unknown
  std::optional<AksValue> aks;
  std::optional<double> improved_gv;
  std::vector<std::string> notes;  // why a field was not computed

  bool chain_ok() const {
    if (greedy && gv > *greedy) return false;
    if (greedy && alpha && *greedy > *alpha) return false;
    if (alpha && gv > *alpha) return false;
    return true;
  }
};

// Fills every field whose budget allows; a field that cannot be computed is
// left empty with a note, never an error.
inline BoundReport bound_report(const SrkParams& params, int d, const BoundOptions& opt = {}) {
  if (d < 1) throw Error("bound_report: distance must be >= 1");
  BoundReport r{params, d};
  const int k = d - 1;
  const PowerGraphSpec spec{params, k};
  r.V = space_size(params);
  r.ball = ball_volume(params, k);
  r.gv_ratio = Rational::make(r.V, r.ball);
  r.gv = r.gv_ratio.ceil();
  r.D = r.ball - 1;
  if (k == 0) {
    r.greedy = r.V;
    r.alpha = r.V;
    r.classes = Nat(1);
    r.avg_class = r.V.convert_to<double>();
    r.T = Nat(0);
    r.Delta = Nat(0);
  } else {
    try {
      r.greedy = Nat(greedy_gv_code(spec, opt.order, opt.max_vertices).size());
      const auto parts = greedy_partition(spec, opt.order, opt.max_vertices);
      r.classes = Nat(parts.size());
      r.avg_class = std::exp2(log2_nat(r.V) - log2_nat(Nat(parts.size())));
    } catch (const BudgetExceeded& e) {
      r.notes.push_back(e.what());
    }
    if (opt.compute_alpha) {
      try {
        r.alpha = max_independent_set(spec, {opt.max_vertices, opt.node_limit}).size;
      } catch (const BudgetExceeded& e) {
        r.notes.push_back(e.what());
      }
    }
    try {
      const GraphStats s = graph_stats(spec, opt.max_ball);
      r.T = s.T;
      r.Delta = s.Delta;
      r.eps_star = s.eps_star;
    } catch (const BudgetExceeded& e) {
      r.notes.push_back(e.what());
    }
  }
  if (r.D >= 1 && r.Delta) r.aks = aks_alpha_lower(r.V, r.D, *r.Delta);
  if (r.D >= 1 && opt.eps) r.improved_gv = improved_gv_value(*opt.eps, r.V, r.D);
  return r;
}

// ---------------------------------------------------------------------------
// Serialisation

inline constexpr const char* kNotComputed = "not computed";

inline const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {"q", "p",       "e", "n", "m",     "d",     "V",        "ball", "gv",
                                                "greedy", "alpha", "classes", "avg_class", "D", "T", "Delta",
                                                "eps_star", "aks"};
  return cols;
}

inline std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

namespace internal {

inline std::vector<std::string> report_cells(const BoundReport& r) {
  auto opt_nat = [](const std::optional<Nat>& x) { return x ? x->str() : std::string(kNotComputed); };
  std::string eps;
  if (r.eps_star)
    eps = format_double(*r.eps_star);
  else
    eps = (r.D < 2 && r.T) ? "n/a" : kNotComputed;
  std::string aks = r.aks ? format_double(r.aks->value) : (r.D < 1 ? "n/a" : kNotComputed);
  return {std::to_string(r.params.q()),
          std::to_string(r.params.field.p()),
          std::to_string(r.params.field.e()),
          join_ints(r.params.n),
          join_ints(r.params.m),
          std::to_string(r.d),
          r.V.str(),
          r.ball.str(),
          r.gv.str(),
          opt_nat(r.greedy),
          opt_nat(r.alpha),
          opt_nat(r.classes),
          r.avg_class ? format_double(*r.avg_class) : kNotComputed,
          r.D.str(),
          opt_nat(r.T),
          opt_nat(r.Delta),
          eps,
          aks};
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace internal

inline void write_csv_header(std::ostream& os) {
  const auto& cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
}

inline void write_csv_row(std::ostream& os, const BoundReport& r) {
  const auto cells = internal::report_cells(r);
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << internal::csv_escape(cells[i]);
  os << "\n";
}

// Same columns as the CSV; numbers that fit stay numeric, big ones become
// decimal strings. Adds the exact GV fraction and any notes.
inline nlohmann::ordered_json report_to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  const auto cells = internal::report_cells(r);
  const auto& cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) j[cols[i]] = cells[i];
  j["q"] = r.params.q();
  j["p"] = r.params.field.p();
  j["e"] = r.params.field.e();
  j["n"] = r.params.n;
  j["m"] = r.params.m;
  j["d"] = r.d;
  j["gv_ratio"] = r.gv_ratio.str();
  if (r.aks) j["aks_triangle_free"] = r.aks->triangle_free;
  if (r.improved_gv) j["improved_gv"] = format_double(*r.improved_gv);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace srk

#endif  // SRK_BOUNDS_HPP_
