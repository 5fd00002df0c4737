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

// srk: command-line front end for the sum-rank workbench.
//
// Exit codes: 0 success, 1 computational failure, 2 usage or parse error.

#include <cstdio>
#include <functional>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "srk/srk.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Raised while turning arguments into objects; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpaceArgs {
  int q = 2;
  std::vector<int> n;
  std::vector<int> m;

  void add(CLI::App* app) {
    app->add_option("-q", q, "field size (prime power)")->required();
    app->add_option("-n", n, "block row counts, e.g. 2,1,1")->delimiter(',')->required();
    app->add_option("-m", m, "block column counts, e.g. 2,2,2")->delimiter(',')->required();
  }

  srk::SrkParams params() const {
    try {
      return srk::SrkParams::make(srk::Field::make_q(q), n, m);
    } catch (const srk::Error& e) {
      throw UsageError(e.what());
    }
  }
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw srk::Error("cannot write " + path);
  out << text;
}

std::string opt_str(const std::optional<double>& x) { return x ? srk::format_double(*x) : "n/a"; }

// ---------------------------------------------------------------------------

int cmd_volume(const SpaceArgs& s, int k) {
  const auto p = s.params();
  if (k < 0) throw UsageError("-k must be >= 0");
  std::cout << srk::ball_volume(p, k) << "\n";
  return kOk;
}

int cmd_count(int q, int rows, int cols, std::optional<int> r) {
  if (!srk::factor_prime_power(q)) throw UsageError("q must be a prime power");
  if (rows < 1 || cols < 1) throw UsageError("matrix dimensions must be positive");
  if (r) {
    if (*r < 0) throw UsageError("rank must be >= 0");
    std::cout << srk::count_rank_matrices(rows, cols, *r, q) << "\n";
    return kOk;
  }
  const auto d = srk::rank_distribution(rows, cols, q);
  for (std::size_t i = 0; i < d.counts.size(); ++i) std::cout << i << " " << d.counts[i] << "\n";
  return kOk;
}

int cmd_qtable(int q, int n, std::optional<int> only_i) {
  if (!srk::factor_prime_power(q)) throw UsageError("q must be a prime power");
  if (n < 1) throw UsageError("size must be positive");
  std::cout << "i,j,c,Q,M_j\n";
  for (int i = 0; i <= n; ++i) {
    if (only_i && *only_i != i) continue;
    for (int j = 0; j <= n; ++j) {
      const srk::Nat m = srk::square_rank_count(n, j, q);
      for (int c = 0; c <= j; ++c)
        std::cout << i << "," << j << "," << c << "," << srk::q_closed(i, j, c, n, q) << "," << m << "\n";
    }
  }
  return kOk;
}

int cmd_graph_stats(const SpaceArgs& s, int k, std::uint64_t max_ball, bool with_upper) {
  const auto p = s.params();
  if (k < 0 || k > p.max_weight()) throw UsageError("-k must lie in 0..sum n_i");
  const auto st = srk::graph_stats({p, k}, max_ball);
  nlohmann::ordered_json j{{"params", srk::params_json(p)},
                           {"k", k},
                           {"V", st.num_vertices.str()},
                           {"D", st.D.str()},
                           {"T", st.T.str()},
                           {"Delta", st.Delta.str()},
                           {"eps_star", opt_str(st.eps_star)}};
  if (with_upper) {
    try {
      j["T_upper"] = srk::t_upper(p, k).str();
    } catch (const srk::Error& e) {
      j["T_upper"] = std::string("n/a: ") + e.what();
    }
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_alpha(const SpaceArgs& s, int d, std::uint64_t node_limit, const std::string& witness) {
  const auto p = s.params();
  if (d < 1 || d > p.max_weight()) throw UsageError("-d must lie in 1..sum n_i");
  srk::MisOptions opt;
  opt.node_limit = node_limit;
  const auto r = srk::max_independent_set({p, d - 1}, opt);
  std::cout << r.size << "\n";
  if (!witness.empty()) emit(srk::code_to_json(r.witness).dump() + "\n", witness);
  return kOk;
}

int cmd_partition(const SpaceArgs& s, int d, const std::string& order) {
  const auto p = s.params();
  if (d < 1 || d > p.max_weight()) throw UsageError("-d must lie in 1..sum n_i");
  srk::OrderPolicy policy;
  try {
    policy = srk::parse_order_policy(order);
  } catch (const srk::Error& e) {
    throw UsageError(e.what());
  }
  const auto parts = srk::greedy_partition({p, d - 1}, policy);
  std::vector<std::size_t> sizes;
  for (const auto& c : parts) sizes.push_back(c.size());
  nlohmann::ordered_json j{{"params", srk::params_json(p)},
                           {"d", d},
                           {"classes", parts.size()},
                           {"average", srk::format_double(static_cast<double>(srk::SrkSpace(p).size()) / parts.size())},
                           {"gv_ratio", srk::gv_ratio(p, d).str()},
                           {"sizes", sizes}};
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_gv(const SpaceArgs& s, int d, bool greedy) {
  const auto p = s.params();
  if (d < 1 || d > p.max_weight()) throw UsageError("-d must lie in 1..sum n_i");
  nlohmann::ordered_json j{{"params", srk::params_json(p)},
                           {"d", d},
                           {"gv", srk::gv_lower(p, d).str()},
                           {"gv_ratio", srk::gv_ratio(p, d).str()}};
  if (greedy) j["greedy"] = srk::greedy_gv_code({p, d - 1}).size();
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_report(srk::SweepConfig cfg, const std::vector<std::string>& instances, const std::string& output) {
  try {
    for (const auto& s : instances) cfg.instances.push_back(srk::parse_instance(s));
    cfg.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto reports = srk::run_sweep(cfg);
  std::ostringstream os;
  srk::write_reports(os, reports, cfg.format);
  emit(os.str(), output);
  return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  const auto& names = srk::suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw UsageError("unknown suite '" + suite + "'");
  srk::VerifyOptions opt;
  opt.seed = seed;
  bool ok = true;
  for (const auto& r : srk::run_suites(suite, opt)) {
    std::cout << (r.passed() ? "pass " : "FAIL ") << r.name << ": " << r.checks << " checks, " << r.failures
              << " counterexamples";
    if (r.skipped) std::cout << ", " << r.skipped << " not computed";
    std::cout << "\n";
    if (r.counterexample) std::cout << r.counterexample->dump(2) << "\n";
    ok = ok && r.passed();
  }
  return ok ? kOk : kFailure;
}

// Chain file: one object or {"chains": [...]}, each with "type" hamming |
// srk | upper | zero-rate and the fields of that chain.
int cmd_ramsey(const std::string& chain_file, const std::string& table_file) {
  const nlohmann::json chains_doc = read_json(chain_file);
  srk::RamseyTable table;
  if (!table_file.empty()) {
    try {
      table = srk::RamseyTable::from_json(read_json(table_file));
    } catch (const srk::Error& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<nlohmann::json> chains;
  if (chains_doc.is_object() && chains_doc.contains("chains"))
    chains = chains_doc["chains"].get<std::vector<nlohmann::json>>();
  else
    chains.push_back(chains_doc);

  struct Parsed {
    std::string type;
    nlohmann::json j;
  };
  std::vector<Parsed> parsed;
  auto geti = [](const nlohmann::json& j, const char* k) {
    if (!j.contains(k) || !j[k].is_number_integer()) throw UsageError(std::string("chain field '") + k + "' missing");
    return j[k].get<int>();
  };
  for (const auto& c : chains) {
    if (!c.is_object() || !c.contains("type")) throw UsageError("chain entry needs a \"type\"");
    parsed.push_back({c["type"].get<std::string>(), c});
  }

  auto out = nlohmann::ordered_json::array();
  for (const auto& [type, j] : parsed) {
    srk::ChainConfig cfg;
    cfg.eps = j.value("eps", cfg.eps);
    cfg.c = j.value("c", cfg.c);
    cfg.c_prime = j.value("c_prime", cfg.c_prime);
    cfg.log_base = j.value("log_base", cfg.log_base);
    auto params = [&] {
      try {
        return srk::SrkParams::make(srk::Field::make_q(geti(j, "q")), j.at("n").get<std::vector<int>>(),
                                    j.at("m").get<std::vector<int>>());
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(e.what());
      } catch (const srk::Error& e) {
        throw UsageError(e.what());
      }
    };
    auto given = [&](const char* key) -> std::optional<srk::Nat> {
      if (!j.contains(key)) return std::nullopt;
      return j[key].is_string() ? srk::parse_nat(j[key].get<std::string>()) : srk::Nat(j[key].get<std::uint64_t>());
    };
    srk::DerivedBound b;
    if (type == "hamming") {
      b = srk::hamming_to_ramsey_lb(geti(j, "k"), geti(j, "a"), geti(j, "b"), geti(j, "N"), geti(j, "d"), table,
                                    given("code_lb"));
    } else if (type == "srk") {
      b = srk::srk_to_ramsey_lb(params(), geti(j, "d"), geti(j, "k"), geti(j, "a"), geti(j, "b"), table,
                                given("srk_lb"), cfg);
    } else if (type == "upper") {
      std::function<srk::Nat(int)> supplied;
      if (const auto v = given("srk_value")) supplied = [v = *v](int) { return v; };
      b = srk::ramsey_upper_from_srk(params(), geti(j, "d"), cfg, supplied);
    } else if (type == "zero-rate") {
      b = srk::zero_rate_instance_check(params(), geti(j, "k"), geti(j, "j"));
    } else {
      throw UsageError("unknown chain type '" + type + "'");
    }
    auto rec = srk::derived_to_json(b);
    rec["reevaluates"] = b.reevaluate();
    out.push_back(rec);
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bounds and constructions for sum-rank-metric codes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  SpaceArgs space;
  int k = 1, d = 2;
  std::uint64_t max_ball = srk::kDefaultMaxBall;
  std::uint64_t node_limit = srk::kDefaultNodeLimit;

  auto* volume = app.add_subcommand("volume", "size of the sum-rank ball of radius k");
  space.add(volume);
  volume->add_option("-k", k, "radius")->required();

  int cq = 2, rows = 1, cols = 1;
  std::optional<int> crank;
  auto* count = app.add_subcommand("count", "number of rows x cols matrices of each rank");
  count->add_option("-q", cq, "field size")->required();
  count->add_option("--rows", rows)->required();
  count->add_option("--cols", cols)->required();
  count->add_option("-r,--rank", crank, "a single rank");

  int qn = 2;
  std::optional<int> qi;
  auto* qtable = app.add_subcommand("qtable", "closed-form Q(i,j,c) for n x n matrices, with M(j)");
  qtable->add_option("-q", cq, "field size")->required();
  qtable->add_option("--size", qn, "matrix size n")->required();
  qtable->add_option("-i", qi, "only this rank of the fixed matrix");

  bool with_upper = false;
  auto* stats = app.add_subcommand("graph-stats", "V, D, T, Delta and eps* of the radius-k power graph");
  space.add(stats);
  stats->add_option("-k", k, "radius")->required();
  stats->add_option("--max-ball", max_ball, "largest ball enumerated for T");
  stats->add_flag("--upper", with_upper, "also print the closed-form upper bound on T");

  std::string witness;
  auto* alpha = app.add_subcommand("alpha", "exact largest code with minimum distance >= d");
  space.add(alpha);
  alpha->add_option("-d", d, "minimum distance")->required();
  alpha->add_option("--node-limit", node_limit, "branch-and-bound node budget");
  alpha->add_option("--witness", witness, "write an optimal code as JSON");

  std::string order = "lex";
  auto* partition = app.add_subcommand("partition", "greedy partition of the space into codes");
  space.add(partition);
  partition->add_option("-d", d, "minimum distance")->required();
  partition->add_option("--order", order)->check(CLI::IsMember({"lex", "weight-then-lex"}));

  bool gv_greedy = false;
  auto* gv = app.add_subcommand("gv", "sphere-covering lower bound");
  space.add(gv);
  gv->add_option("-d", d, "minimum distance")->required();
  gv->add_flag("--greedy", gv_greedy, "also build the greedy code");

  srk::SweepConfig sweep;
  std::vector<std::string> instances;
  std::string output;
  std::string report_order = "lex";
  std::optional<double> report_eps;
  std::uint64_t max_vertices = srk::default_max_vertices();
  auto* report = app.add_subcommand("report", "bound table over a sweep of spaces");
  report->add_option("--q", sweep.qs, "generate every space over these fields")->delimiter(',');
  report->add_option("--max-space", sweep.max_space, "largest |V| generated");
  report->add_option("--instance", instances, "explicit space q:n:m, e.g. 2:2,1:2,2");
  report->add_option("--d", sweep.ds, "distances (default: all)")->delimiter(',');
  report->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json"}));
  report->add_option("-o,--output", output, "output file (default stdout)");
  report->add_option("--max-vertices", max_vertices);
  report->add_option("--max-ball", max_ball);
  report->add_option("--node-limit", node_limit);
  report->add_option("--eps", report_eps, "eps for the improved GV column");
  report->add_option("--order", report_order)->check(CLI::IsMember({"lex", "weight-then-lex"}));
  report->add_option("--threads", sweep.threads);

  std::string suite;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "run a verification suite (or all)");
  verify->add_option("suite", suite)->required();
  verify->add_option("--seed", seed);

  std::string chain_file, table_file;
  auto* ramsey = app.add_subcommand("ramsey", "evaluate Ramsey inequality chains");
  ramsey->add_option("--chain", chain_file)->required()->check(CLI::ExistingFile);
  ramsey->add_option("--table", table_file)->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*volume) return cmd_volume(space, k);
    if (*count) return cmd_count(cq, rows, cols, crank);
    if (*qtable) return cmd_qtable(cq, qn, qi);
    if (*stats) return cmd_graph_stats(space, k, max_ball, with_upper);
    if (*alpha) return cmd_alpha(space, d, node_limit, witness);
    if (*partition) return cmd_partition(space, d, order);
    if (*gv) return cmd_gv(space, d, gv_greedy);
    if (*report) {
      sweep.options.max_vertices = max_vertices;
      sweep.options.max_ball = max_ball;
      sweep.options.node_limit = node_limit;
      sweep.options.eps = report_eps;
      try {
        sweep.options.order = srk::parse_order_policy(report_order);
      } catch (const srk::Error& e) {
        throw UsageError(e.what());
      }
      return cmd_report(sweep, instances, output);
    }
    if (*verify) return cmd_verify(suite, seed);
    if (*ramsey) return cmd_ramsey(chain_file, table_file);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
