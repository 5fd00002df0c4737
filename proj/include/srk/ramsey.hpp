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

// Inequality chains between code sizes and set-coloring Ramsey numbers
// R(k;r,s). Ramsey values are never built in; they come from a user table.
//
// Every chain is recorded as a list of steps. Each step names a rule, its
// inputs as strings and its output; apply_rule recomputes the output from the
// inputs alone, so a saved derivation can be replayed and compared exactly.

#ifndef SRK_RAMSEY_HPP_
#define SRK_RAMSEY_HPP_

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "srk/bounds.hpp"
#include "srk/counting.hpp"
#include "srk/graph.hpp"
#include "srk/nat.hpp"
#include "srk/params.hpp"

namespace srk {

class MissingTableEntry : public Error {
 public:
  using Error::Error;
};

struct RamseyEntry {
  Nat lo, hi;
  std::string source;
};

class RamseyTable {
 public:
  using Key = std::tuple<int, int, int>;  // (k, r, s)

  void add(int k, int r, int s, Nat lo, Nat hi, std::string source) {
    if (k < 3) throw Error("ramsey table: k must be >= 3");
    if (!(r > s && s >= 1)) throw Error("ramsey table: need r > s >= 1");
    if (lo > hi) throw Error("ramsey table: lo > hi for R(" + key_str({k, r, s}) + ")");
    entries_[{k, r, s}] = {std::move(lo), std::move(hi), std::move(source)};
  }

  const RamseyEntry* find(int k, int r, int s) const {
    auto it = entries_.find({k, r, s});
    return it == entries_.end() ? nullptr : &it->second;
  }

  // The exact value; throws if absent or only bracketed.
  const RamseyEntry& exact(int k, int r, int s) const {
    const RamseyEntry* e = find(k, r, s);
    if (!e) throw MissingTableEntry("missing table entry R(" + key_str({k, r, s}) + ")");
    if (e->lo != e->hi)
      throw MissingTableEntry("table entry R(" + key_str({k, r, s}) + ") is not exact: [" + e->lo.str() + ", " +
                              e->hi.str() + "]");
    return *e;
  }

  std::size_t size() const { return entries_.size(); }
  const std::map<Key, RamseyEntry>& entries() const { return entries_; }

  static std::string key_str(const Key& key) {
    return std::to_string(std::get<0>(key)) + ";" + std::to_string(std::get<1>(key)) + "," +
           std::to_string(std::get<2>(key));
  }

  static RamseyTable from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
      throw Error("ramsey table: expected {\"entries\": [...]}");
    RamseyTable t;
    for (const auto& e : j["entries"]) {
      for (const char* f : {"k", "r", "s", "lo", "hi"})
        if (!e.contains(f)) throw Error(std::string("ramsey table: entry missing field '") + f + "'");
      auto nat = [](const nlohmann::json& v) {
        return v.is_string() ? parse_nat(v.get<std::string>()) : Nat(v.get<std::uint64_t>());
      };
      t.add(e["k"].get<int>(), e["r"].get<int>(), e["s"].get<int>(), nat(e["lo"]), nat(e["hi"]),
            e.value("source", std::string()));
    }
    return t;
  }

 private:
  std::map<Key, RamseyEntry> entries_;
};

struct ChainConfig {
  double eps = 0.1;
  double c = 1.0;
  double c_prime = 1.0;
  double log_base = 2.0;

  void validate() const {
    if (!(eps > 0 && c > 0 && c_prime > 0)) throw Error("chain config: eps, c, c' must be positive");
    if (!(log_base > 1)) throw Error("chain config: log base must exceed 1");
  }
};

struct DerivationStep {
  std::string rule;
  std::string formula;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string output;

  const std::string& input(const std::string& name) const {
    for (const auto& [k, v] : inputs)
      if (k == name) return v;
    throw Error("derivation step '" + rule + "' has no input '" + name + "'");
  }
};

struct DerivedBound {
  std::string target;
  std::string kind;  // lower | upper | report
  std::string value;
  std::vector<DerivationStep> steps;
  std::vector<std::string> flags;

  bool has_flag(const std::string& f) const {
    for (const auto& x : flags)
      if (x == f) return true;
    return false;
  }
  bool reevaluate() const;
};

// ---------------------------------------------------------------------------
// Rules

namespace internal {

inline std::string real_str(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline double parse_real(const std::string& s) {
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  return std::stod(s);
}

inline int parse_int(const std::string& s) { return std::stoi(s); }

inline std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find(',', pos);
    out.push_back(std::stoi(s.substr(pos, next - pos)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

inline SrkParams params_from(const DerivationStep& st) {
  return SrkParams::make(Field::make_q(parse_int(st.input("q"))), parse_list(st.input("n")),
                         parse_list(st.input("m")));
}

inline SrkParams hamming_params(int q, int N) {
  if (!factor_prime_power(q))
    throw Error("q = " + std::to_string(q) + " is not a prime power; supply code_lb explicitly");
  return SrkParams::make(Field::make_q(q), std::vector<int>(N, 1), std::vector<int>(N, 1));
}

inline Nat exact_alpha(const SrkParams& params, int d) {
  if (d <= 1) return space_size(params);
  if (d > params.max_weight()) return Nat(1);
  return max_independent_set({params, d - 1}).size;
}

// log_base(x) where x = r / min(s, r - s).
inline double cap_exponent(double c_prime, int k, int r, int s, double base) {
  const double ratio = static_cast<double>(r) / std::min(s, r - s);
  const double rs = static_cast<double>(r - s);
  return c_prime * k * rs * rs / r * (std::log(ratio) / std::log(base));
}

}  // namespace internal

// Recomputes a step's output from its inputs.
inline std::string apply_rule(const DerivationStep& st) {
  using namespace internal;
  const std::string& rule = st.rule;
  if (rule == "table") return st.input("R");
  if (rule == "alphabet") return (parse_nat(st.input("R")) - 1).str();
  if (rule == "alphabet-power") {
    const int q = parse_int(st.input("q"));
    const int m = parse_int(st.input("m"));
    return nat_pow(q, m).str();
  }
  if (rule == "gv-hamming") {
    const auto p = hamming_params(parse_int(st.input("q")), parse_int(st.input("N")));
    return gv_lower(p, parse_int(st.input("d"))).str();
  }
  if (rule == "gv-srk") return gv_lower(params_from(st), parse_int(st.input("d"))).str();
  if (rule == "exact-alpha") return exact_alpha(params_from(st), parse_int(st.input("d"))).str();
  if (rule == "given") return st.input("value");
  if (rule == "code-ramsey-lower") return (parse_nat(st.input("code_lb")) + 1).str();
  if (rule == "ramsey-cap-exponent")
    return real_str(cap_exponent(parse_real(st.input("c_prime")), parse_int(st.input("k")),
                                 parse_int(st.input("r")), parse_int(st.input("s")),
                                 parse_real(st.input("log_base"))));
  if (rule == "j-upper") {
    const Nat Q = parse_nat(st.input("Q"));
    const Nat t(parse_int(st.input("t")));
    const Nat d(parse_int(st.input("d")));
    return Rational::make((Q - 1) * t - Q * d + Q, Q).str();
  }
  if (rule == "shifted-distance") {
    const double x = parse_real(st.input("d")) - parse_real(st.input("c")) * parse_real(st.input("j"));
    return real_str(std::ceil(x));
  }
  if (rule == "ramsey-upper-max") {
    const double eps = parse_real(st.input("eps"));
    const double a = parse_real(st.input("A"));
    const double d = parse_real(st.input("d"));
    return real_str(std::max((1 + eps) * a, eps * d));
  }
  if (rule == "zero-rate-j") {
    const Nat Q = parse_nat(st.input("Q"));
    const Nat j(parse_int(st.input("j")));
    const Nat N(parse_int(st.input("N")));
    const Nat k(parse_int(st.input("k")));
    return j * j * (Q - 1) <= N * (k - 1) ? "holds" : "fails";
  }
  if (rule == "zero-rate-distance") {
    const Nat Q = parse_nat(st.input("Q"));
    const long long N = parse_int(st.input("N"));
    const long long j = parse_int(st.input("j"));
    if (j >= N) return "0";
    return ceil_div((Q - 1) * Nat(N - j), Q).str();
  }
  throw Error("unknown derivation rule '" + rule + "'");
}

inline bool DerivedBound::reevaluate() const {
  if (steps.empty()) return false;
  for (const auto& st : steps)
    if (apply_rule(st) != st.output) return false;
  return true;
}

namespace internal {

inline DerivationStep& push_step(DerivedBound& b, std::string rule, std::string formula,
                                 std::vector<std::pair<std::string, std::string>> inputs) {
  DerivationStep st{std::move(rule), std::move(formula), std::move(inputs), {}};
  st.output = apply_rule(st);
  b.steps.push_back(std::move(st));
  return b.steps.back();
}

inline std::vector<std::pair<std::string, std::string>> params_inputs(const SrkParams& p) {
  return {{"q", std::to_string(p.q())}, {"n", join_ints(p.n)}, {"m", join_ints(p.m)}};
}

inline std::string ramsey_name(int k, int r, int s) {
  return "R(" + std::to_string(k) + ";" + std::to_string(r) + "," + std::to_string(s) + ")";
}

inline std::string table_step(DerivedBound& b, const RamseyTable& table, int k, int a, int bb) {
  const RamseyEntry& e = table.exact(k, a, bb);
  return push_step(b, "table", ramsey_name(k, a, bb) + " from user table",
                   {{"k", std::to_string(k)},
                    {"a", std::to_string(a)},
                    {"b", std::to_string(bb)},
                    {"R", e.lo.str()},
                    {"source", e.source}})
      .output;
}

}  // namespace internal

// Hamming codes over q = R(k;a,b) - 1 give R(k;Na,db) >= A_q(N,d) + 1. Without
// code_lb the GV bound on the q-ary length-N instance is used.
inline DerivedBound hamming_to_ramsey_lb(int k, int a, int b, int N, int d, const RamseyTable& table,
                                         std::optional<Nat> code_lb = std::nullopt) {
  using namespace internal;
  if (!(b < a && b >= 1)) throw Error("hamming chain: need 1 <= b < a");
  if (!(d >= 1 && d <= N)) throw Error("hamming chain: need 1 <= d <= N");
  const int r = N * a, s = d * b;
  DerivedBound out{ramsey_name(k, r, s), "lower"};
  if (d == N) out.flags.push_back("d = N: outside the d < N hypothesis");
  const std::string R = table_step(out, table, k, a, b);
  const std::string q = push_step(out, "alphabet", "q = R - 1", {{"R", R}}).output;
  std::string lb;
  if (code_lb) {
    lb = push_step(out, "given", "A_q(N,d) >= supplied", {{"value", code_lb->str()}}).output;
  } else {
    if (parse_nat(q) > kMaxFieldSize) throw Error("hamming chain: alphabet too large");
    lb = push_step(out, "gv-hamming", "A_q(N,d) >= ceil(q^N / V_q(N,d-1))",
                   {{"q", q}, {"N", std::to_string(N)}, {"d", std::to_string(d)}})
             .output;
  }
  out.value = push_step(out, "code-ramsey-lower", ramsey_name(k, r, s) + " >= A_q(N,d) + 1", {{"code_lb", lb}}).output;
  return out;
}

// Sum-rank version: q^m = R(k;a,b) - 1 with m = max m_i and N = sum n_i.
// Also evaluates the exponent of the upper cap 2^{c'k(r-s)^2/r log(r/min(s,r-s))};
// flags "inconsistent" when that cap falls below the derived lower bound.
inline DerivedBound srk_to_ramsey_lb(const SrkParams& params, int d, int k, int a, int b, const RamseyTable& table,
                                     std::optional<Nat> srk_lb = std::nullopt, const ChainConfig& config = {}) {
  using namespace internal;
  config.validate();
  const int N = params.hamming_length();
  if (!(b < a && b >= 1)) throw Error("sum-rank chain: need 1 <= b < a");
  if (!(d >= 1 && d <= N)) throw Error("sum-rank chain: need 1 <= d <= N");
  const int r = N * a, s = d * b;
  DerivedBound out{ramsey_name(k, r, s), "lower"};
  if (d == N) out.flags.push_back("d = N: outside the d < N hypothesis");
  const std::string R = table_step(out, table, k, a, b);
  const std::string Rm1 = push_step(out, "alphabet", "R - 1", {{"R", R}}).output;
  const std::string qm = push_step(out, "alphabet-power", "q^m, m = max m_i",
                                   {{"q", std::to_string(params.q())}, {"m", std::to_string(params.max_m())}})
                             .output;
  if (qm != Rm1)
    throw Error("sum-rank chain: table mismatch, q^m = " + qm + " but " + ramsey_name(k, a, b) + " - 1 = " + Rm1);
  auto inputs = params_inputs(params);
  inputs.emplace_back("d", std::to_string(d));
  std::string lb;
  if (srk_lb) {
    lb = push_step(out, "given", "A^SRK(n,m,d) >= supplied", {{"value", srk_lb->str()}}).output;
  } else {
    try {
      lb = push_step(out, "exact-alpha", "A^SRK(n,m,d) = alpha(power graph)", inputs).output;
    } catch (const BudgetExceeded&) {
      lb = push_step(out, "gv-srk", "A^SRK(n,m,d) >= ceil(|V| / V(d-1))", inputs).output;
    }
  }
  out.value =
      push_step(out, "code-ramsey-lower", ramsey_name(k, r, s) + " >= A^SRK(n,m,d) + 1", {{"code_lb", lb}}).output;
  const std::string ex = push_step(out, "ramsey-cap-exponent", "log2 cap = c'k(r-s)^2/r * log(r/min(s,r-s))",
                                   {{"c_prime", real_str(config.c_prime)},
                                    {"k", std::to_string(k)},
                                    {"r", std::to_string(r)},
                                    {"s", std::to_string(s)},
                                    {"log_base", real_str(config.log_base)}})
                             .output;
  if (log2_nat(parse_nat(out.value)) > parse_real(ex)) out.flags.push_back("inconsistent");
  out.flags.push_back("cap depends on unverified constant c'");
  return out;
}

// R(q^{m'}+1; t, d) <= max((1+eps) A^SRK(n,m,d-cj), eps d), with
// j = (1 - 1/q^{m'}) t - d + 1 and m' = min m_i. The code term comes from
// srk_value(distance); by default the exact alpha.
inline DerivedBound ramsey_upper_from_srk(const SrkParams& params, int d, const ChainConfig& config,
                                          std::function<Nat(int)> srk_value = nullptr) {
  using namespace internal;
  config.validate();
  const int t = params.t();
  const Nat Q = nat_pow(params.q(), params.min_m());
  if (d < 1 || Nat(d) * Q > (Q - 1) * t) throw Error("upper chain: need 1 <= d <= (1 - 1/q^m') t");
  DerivedBound out{"R(" + Nat(Q + 1).str() + ";" + std::to_string(t) + "," + std::to_string(d) + ")", "upper"};
  const std::string j = push_step(out, "j-upper", "j = (1 - 1/Q) t - d + 1",
                                  {{"Q", Q.str()}, {"t", std::to_string(t)}, {"d", std::to_string(d)}})
                            .output;
  const Rational jr = [&] {
    const auto slash = j.find('/');
    if (slash == std::string::npos) return Rational::make(parse_nat(j), Nat(1));
    return Rational::make(parse_nat(j.substr(0, slash)), parse_nat(j.substr(slash + 1)));
  }();
  const std::string dd = push_step(out, "shifted-distance", "ceil(d - c j)",
                                   {{"d", std::to_string(d)}, {"c", real_str(config.c)}, {"j", real_str(jr.to_double())}})
                             .output;
  const double dshift = parse_real(dd);
  if (dshift < 1) throw Error("upper chain: d - c j < 1 (got " + real_str(d - config.c * jr.to_double()) + ")");
  if (dshift != d - config.c * jr.to_double()) out.flags.push_back("distance rounded up");
  const int di = static_cast<int>(dshift);
  std::string A;
  if (srk_value) {
    A = push_step(out, "given", "A^SRK(n,m,ceil(d-cj)) supplied", {{"value", srk_value(di).str()}}).output;
  } else {
    auto inputs = params_inputs(params);
    inputs.emplace_back("d", std::to_string(di));
    A = push_step(out, "exact-alpha", "A^SRK(n,m,ceil(d-cj)) = alpha(power graph)", inputs).output;
  }
  out.value = push_step(out, "ramsey-upper-max", "max((1+eps) A, eps d)",
                        {{"eps", real_str(config.eps)}, {"A", real_str(parse_nat(A).convert_to<double>())},
                         {"d", std::to_string(d)}})
                  .output;
  out.flags.push_back("conditional on existential constant c");
  return out;
}

// Checks the preconditions around the zero-rate threshold for one instance and
// solves for A at the resulting distance when the instance is small. The
// O(N^k) growth statement itself is not checked.
inline DerivedBound zero_rate_instance_check(const SrkParams& params, int k, int j) {
  using namespace internal;
  const int N = params.hamming_length();
  const Nat Q = nat_pow(params.q(), params.max_m());
  DerivedBound out{"A^SRK(" + params.describe() + ")", "report"};
  const std::string cond = push_step(out, "zero-rate-j", "j^2 (Q - 1) <= N (k - 1)",
                                     {{"Q", Q.str()},
                                      {"j", std::to_string(j)},
                                      {"N", std::to_string(N)},
                                      {"k", std::to_string(k)}})
                               .output;
  if (cond != "holds") {
    out.flags.push_back("precondition failed: j too large");
    out.value = "n/a";
    return out;
  }
  const std::string dist = push_step(out, "zero-rate-distance", "ceil((1 - 1/Q)(N - j))",
                                     {{"Q", Q.str()}, {"N", std::to_string(N)}, {"j", std::to_string(j)}})
                               .output;
  if (j < N && ((Q - 1) * Nat(N - j)) % Q != 0) out.flags.push_back("distance rounded up");
  // (1 - 1/Q)(N - j) < N always holds for j >= 0; recorded for completeness.
  if (!((Q - 1) * Nat(N - std::min(j, N)) < Q * N)) out.flags.push_back("distance hypothesis fails");
  const int d = std::max(1, parse_int(dist));
  auto inputs = params_inputs(params);
  inputs.emplace_back("d", std::to_string(d));
  try {
    out.value = push_step(out, "exact-alpha", "A^SRK(n,m,d) = alpha(power graph)", inputs).output;
    if (parse_nat(out.value) < 2) out.flags.push_back("|C| >= 2 hypothesis fails");
  } catch (const BudgetExceeded&) {
    out.value = kNotComputed;
    out.flags.push_back("A not computed: instance over budget");
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json derived_to_json(const DerivedBound& b) {
  nlohmann::ordered_json j;
  j["target"] = b.target;
  j["kind"] = b.kind;
  j["value"] = b.value;
  if (b.kind == "lower") j["statement"] = b.target + " >= " + b.value;
  if (b.kind == "upper") j["statement"] = b.target + " <= " + b.value;
  j["flags"] = b.flags;
  auto steps = nlohmann::ordered_json::array();
  for (const auto& st : b.steps) {
    nlohmann::ordered_json s;
    s["rule"] = st.rule;
    s["formula"] = st.formula;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : st.inputs) in[k] = v;
    s["inputs"] = in;
    s["output"] = st.output;
    steps.push_back(s);
  }
  j["derivation"] = steps;
  return j;
}

inline DerivedBound derived_from_json(const nlohmann::json& j) {
  DerivedBound b;
  b.target = j.at("target").get<std::string>();
  b.kind = j.at("kind").get<std::string>();
  b.value = j.at("value").get<std::string>();
  if (j.contains("flags")) b.flags = j["flags"].get<std::vector<std::string>>();
  for (const auto& s : j.at("derivation")) {
    DerivationStep st;
    st.rule = s.at("rule").get<std::string>();
    st.formula = s.value("formula", std::string());
    for (const auto& [k, v] : s.at("inputs").items()) st.inputs.emplace_back(k, v.get<std::string>());
    st.output = s.at("output").get<std::string>();
    b.steps.push_back(std::move(st));
  }
  return b;
}

}  // namespace srk

#endif  // SRK_RAMSEY_HPP_
