// Command-line front end: constructions, evaluation, exact solving,
// optimization, verification, bound reports, and a reproducible grid runner.
//
// Exit codes: 0 success, 2 invalid parameters, 3 resource guard tripped,
// 1 any other failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tic/bounds.hpp"
#include "tic/canonical.hpp"
#include "tic/combinatorics.hpp"
#include "tic/construct.hpp"
#include "tic/family.hpp"
#include "tic/hamming.hpp"
#include "tic/json_io.hpp"
#include "tic/random.hpp"
#include "tic/shifting.hpp"
#include "tic/solver.hpp"

using nlohmann::json;
using namespace tic;

namespace {

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("TIC_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// Fixed summary-table schema shared by every command that emits CSV.
constexpr const char* kCsvHeader =
    "n,k,t,r,delta_num,delta_den,M,value,reference,verdict";

struct CsvRow {
  std::string n, k, t, r, delta_num, delta_den, m, value, reference, verdict;

  std::string line() const {
    std::ostringstream os;
    os << n << ',' << k << ',' << t << ',' << r << ',' << delta_num << ','
       << delta_den << ',' << m << ',' << value << ',' << reference << ','
       << verdict;
    return os.str();
  }
};

void write_csv(const std::string& path, const std::vector<CsvRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << kCsvHeader << "\n";
  for (const CsvRow& r : rows) out << r.line() << "\n";
}

CsvRow csv_from_bound(const BoundReport& r) {
  CsvRow row;
  row.n = std::to_string(r.n);
  row.k = std::to_string(r.k);
  row.t = std::to_string(r.t);
  row.r = std::to_string(r.r);
  row.delta_num = r.delta.get_num().get_str();
  row.delta_den = r.delta.get_den().get_str();
  row.m = r.m.get_str();
  row.value = rational_to_string(r.bound_value);
  if (r.reference_value) row.reference = r.reference_value->get_str();
  row.verdict = !r.bound_holds      ? "not-applicable"
                : *r.bound_holds    ? "holds"
                                    : "fails";
  return row;
}

CsvRow csv_from_solve(const SolveResult& r) {
  CsvRow row;
  row.n = std::to_string(r.n);
  row.k = std::to_string(r.k);
  row.m = std::to_string(r.m);
  row.value = r.mi_value.get_str();
  row.verdict = r.exact ? "exact" : "inexact";
  return row;
}

CsvRow csv_from_hypotheses(const HypothesisReport& h) {
  CsvRow row;
  row.n = std::to_string(h.n);
  row.k = std::to_string(h.k);
  row.t = std::to_string(h.t);
  row.r = std::to_string(h.r);
  row.delta_num = h.delta.get_num().get_str();
  row.delta_den = h.delta.get_den().get_str();
  row.value = h.required_n.get_str();
  row.verdict = h.met ? "holds" : "fails";
  return row;
}

CsvRow csv_from_distance(const MinDistanceResult& r) {
  CsvRow row;
  row.n = std::to_string(r.n);
  row.k = std::to_string(r.k);
  row.m = r.m.get_str();
  row.value = r.total.get_str();
  if (r.total_lower_bound)
    row.reference = rational_to_string(*r.total_lower_bound);
  row.verdict = !r.lower_bound_sound   ? "not-applicable"
                : *r.lower_bound_sound ? "holds"
                                       : "fails";
  return row;
}

std::vector<int> parse_core(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("bad core list: " + s);
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty core list");
  return out;
}

json move_to_json(const Move& m) {
  return json{{"removed", m.removed.elems},
              {"inserted", m.inserted.elems},
              {"delta", m.delta}};
}

// ---- single-command actions ----

struct ConstructArgs {
  int n = 0, k = 0, t = 1;
  long r = 0;
  std::string m;
  std::vector<std::string> cores;
};

struct SolveArgs {
  int n = 0, k = 0, threads = 0;
  std::uint64_t m = 0;
  std::uint64_t node_limit = SolveOptions{}.node_limit;
  bool all_optima = false;
  bool timing = false;
  std::string csv;
};

struct BoundArgs {
  int n = 0, k = 0, t = 2, vars = 0, threads = 0;
  long r = 0;
  std::string delta = "1";
  std::string m, a, b, sum, csv;
};

int run_solve(const SolveArgs& a) {
  SolveOptions opt;
  opt.enumerate_all = a.all_optima;
  opt.node_limit = a.node_limit;
  opt.threads = resolve_threads(a.threads);
  SolveResult res = max_total_intersection(a.n, a.k, a.m, opt);
  print_json(solve_result_to_json(res));
  if (a.timing) std::cerr << "wall_seconds " << res.wall_seconds << "\n";
  if (!a.csv.empty()) write_csv(a.csv, {csv_from_solve(res)});
  if (!res.exact) {
    std::cerr << "node limit reached; value is a lower bound only\n";
    return 3;
  }
  return 0;
}

int run_solve_distance(const SolveArgs& a) {
  SolveOptions opt;
  opt.node_limit = a.node_limit;
  opt.threads = resolve_threads(a.threads);
  MinDistanceResult res = min_avg_distance(a.n, a.k, BigInt(a.m), opt);
  print_json(min_distance_to_json(res));
  if (a.timing) std::cerr << "wall_seconds " << res.solve.wall_seconds << "\n";
  if (!a.csv.empty()) write_csv(a.csv, {csv_from_distance(res)});
  return 0;
}

// ---- grid runner ----

struct GridSpec {
  std::string command;
  std::vector<int> n, k, t;
  std::vector<long> r;
  std::vector<std::string> m, delta;
  std::uint64_t node_limit = SolveOptions{}.node_limit;
  bool all_optima = false;
  int threads = 0;
  std::string csv_path, json_path;
};

template <typename T>
std::vector<T> grid_field(const json& j, const char* key, std::vector<T> dflt) {
  if (!j.contains(key)) return dflt;
  const json& v = j.at(key);
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

GridSpec load_grid_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path);
  json j;
  in >> j;
  GridSpec s;
  s.command = j.at("command").get<std::string>();
  s.n = grid_field<int>(j, "n", {});
  s.k = grid_field<int>(j, "k", {});
  s.t = grid_field<int>(j, "t", {1});
  s.r = grid_field<long>(j, "r", {0});
  s.m = grid_field<std::string>(j, "m", {""});
  s.delta = grid_field<std::string>(j, "delta", {"1"});
  if (j.contains("node_limit")) s.node_limit = j.at("node_limit").get<std::uint64_t>();
  if (j.contains("all_optima")) s.all_optima = j.at("all_optima").get<bool>();
  if (j.contains("threads")) s.threads = j.at("threads").get<int>();
  if (j.contains("csv")) s.csv_path = j.at("csv").get<std::string>();
  if (j.contains("json")) s.json_path = j.at("json").get<std::string>();
  return s;
}

struct GridInstance {
  int n = 0, k = 0, t = 1;
  long r = 0;
  std::string m, delta;
};

void validate_instance(const GridSpec& s, const GridInstance& g) {
  auto fail = [&](const std::string& field, const std::string& why) {
    std::ostringstream os;
    os << "invalid " << field << " (" << why << ") at n=" << g.n
       << " k=" << g.k << " t=" << g.t << " r=" << g.r;
    if (!g.m.empty()) os << " m=" << g.m;
    if (!g.delta.empty()) os << " delta=" << g.delta;
    throw std::invalid_argument(os.str());
  };
  if (g.n < 1) fail("n", "must be positive");
  if (g.k < 1 || g.k > g.n) fail("k", "need 1 <= k <= n");
  if (s.command == "solve" || s.command == "solve-distance") {
    if (g.m.empty()) fail("m", "required");
    BigInt m(g.m);
    if (m < 1 || m > binom(g.n, g.k)) fail("m", "need 1 <= m <= C(n,k)");
    if (s.command == "solve-distance" && m < 2) fail("m", "need m >= 2");
  } else {
    if (g.t < 1 || g.t > g.k) fail("t", "need 1 <= t <= k");
    if (g.r < 0) fail("r", "must be nonnegative");
    Rational d = parse_rational(g.delta);
    if (d < 0 || d > 1) fail("delta", "must lie in [0,1]");
    if (s.command != "hypotheses") {
      int t = s.command == "bound-t1" ? 1 : g.t;
      if (t + g.r > g.n) fail("r", "levels exceed the ground set");
      Rational scaled = d * Rational(binom(g.n - (t + g.r), g.k - t));
      if (scaled.get_den() != 1)
        fail("delta", "delta * top-level size must be an integer");
    }
  }
}

json run_instance(const GridSpec& s, const GridInstance& g, CsvRow* row) {
  SolveOptions opt;
  opt.node_limit = s.node_limit;
  opt.enumerate_all = s.all_optima;
  opt.threads = resolve_threads(s.threads);
  if (s.command == "solve") {
    SolveResult r = max_total_intersection(g.n, g.k, to_u64(BigInt(g.m), "m"), opt);
    *row = csv_from_solve(r);
    return solve_result_to_json(r);
  }
  if (s.command == "solve-distance") {
    MinDistanceResult r = min_avg_distance(g.n, g.k, BigInt(g.m), opt);
    *row = csv_from_distance(r);
    return min_distance_to_json(r);
  }
  if (s.command == "bound-t1") {
    BoundReport r = upper_bound_t1(g.n, g.k, g.r, parse_rational(g.delta));
    *row = csv_from_bound(r);
    return bound_report_to_json(r);
  }
  if (s.command == "bound-general") {
    SizeDecomposition d;
    d.t = g.t;
    d.r = g.r;
    d.delta = parse_rational(g.delta);
    BigInt m = recompose_size(g.n, g.k, d);
    BoundReport r = upper_bound_general(g.n, g.k, g.t, g.r, d.delta, m);
    *row = csv_from_bound(r);
    return bound_report_to_json(r);
  }
  if (s.command == "hypotheses") {
    HypothesisReport r = hypothesis_report(g.n, g.k, g.t, g.r, parse_rational(g.delta));
    *row = csv_from_hypotheses(r);
    return hypothesis_report_to_json(r);
  }
  throw std::invalid_argument("unknown command in config: " + s.command);
}

int run_grid(const std::string& config_path, const std::string& csv_override,
             const std::string& json_override, int threads_override) {
  GridSpec s = load_grid_spec(config_path);
  if (!csv_override.empty()) s.csv_path = csv_override;
  if (!json_override.empty()) s.json_path = json_override;
  if (threads_override > 0) s.threads = threads_override;
  if (s.n.empty() || s.k.empty())
    throw std::invalid_argument("config needs nonempty n and k lists");

  std::vector<GridInstance> grid;
  for (int n : s.n)
    for (int k : s.k)
      for (int t : s.t)
        for (long r : s.r)
          for (const std::string& m : s.m)
            for (const std::string& delta : s.delta)
              grid.push_back({n, k, t, r, m, delta});
  // Whole grid is validated before any instance runs.
  for (const GridInstance& g : grid) validate_instance(s, g);

  json results = json::array();
  std::vector<CsvRow> rows;
  for (const GridInstance& g : grid) {
    CsvRow row;
    results.push_back(run_instance(s, g, &row));
    rows.push_back(row);
  }
  if (!s.csv_path.empty()) write_csv(s.csv_path, rows);
  if (!s.json_path.empty()) {
    std::ofstream out(s.json_path);
    if (!out) throw std::runtime_error("cannot open " + s.json_path);
    out << results.dump(2) << "\n";
  } else {
    print_json(results);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantitative intersection theory of k-uniform set families"};
  app.require_subcommand(1);
  int exit_code = 0;

  // construct
  auto* construct = app.add_subcommand("construct", "build a named family");
  construct->require_subcommand(1);
  ConstructArgs ca;
  auto* c_lex = construct->add_subcommand("lex", "first M k-subsets in lex order");
  c_lex->add_option("--n", ca.n)->required();
  c_lex->add_option("--k", ca.k)->required();
  c_lex->add_option("--m", ca.m, "family size (decimal string)")->required();
  c_lex->callback([&] { print_json(family_to_json(lex_segment(ca.n, ca.k, BigInt(ca.m)))); });

  auto* c_lext = construct->add_subcommand("lexT", "r-level segment for a given t");
  c_lext->add_option("--n", ca.n)->required();
  c_lext->add_option("--k", ca.k)->required();
  c_lext->add_option("--t", ca.t)->required();
  c_lext->add_option("--r", ca.r)->required();
  c_lext->callback([&] { print_json(family_to_json(lex_t_segment(ca.n, ca.k, ca.t, ca.r))); });

  auto* c_star = construct->add_subcommand("star", "all k-sets containing a core");
  c_star->add_option("--n", ca.n)->required();
  c_star->add_option("--k", ca.k)->required();
  c_star->add_option("--core", ca.m, "comma-separated elements, e.g. 1,2")->required();
  c_star->callback([&] {
    print_json(family_to_json(full_t_star(ca.n, ca.k, parse_core(ca.m))));
  });

  auto* c_union = construct->add_subcommand("starunion", "union of full t-stars");
  c_union->add_option("--n", ca.n)->required();
  c_union->add_option("--k", ca.k)->required();
  c_union->add_option("--core", ca.cores, "repeatable comma-separated core")->required();
  c_union->callback([&] {
    std::vector<std::vector<int>> cores;
    for (const std::string& c : ca.cores) cores.push_back(parse_core(c));
    print_json(family_to_json(star_union(ca.n, ca.k, cores)));
  });

  auto* c_sand = construct->add_subcommand("sandwich", "lex family between L^(r) and L^(r+1)");
  c_sand->add_option("--n", ca.n)->required();
  c_sand->add_option("--k", ca.k)->required();
  c_sand->add_option("--t", ca.t)->required();
  c_sand->add_option("--r", ca.r)->required();
  c_sand->add_option("--m", ca.m)->required();
  c_sand->callback([&] {
    print_json(family_to_json(sandwich_family(ca.n, ca.k, ca.t, ca.r, BigInt(ca.m))));
  });

  // eval
  auto* eval = app.add_subcommand("eval", "total intersection and degree data");
  std::string eval_family;
  std::vector<int> eval_ts;
  eval->add_option("--family", eval_family, "family JSON file")->required();
  eval->add_option("--t", eval_ts, "also report t-set totals (repeatable)");
  eval->callback([&] {
    SetFamily f = load_family(eval_family);
    json out{{"n", f.n},
             {"k", f.k},
             {"m", f.size()},
             {"total_intersection", total_intersection(f).get_str()},
             {"degrees", degree_vector(f)}};
    json totals = json::object();
    json intersecting = json::object();
    for (int t : eval_ts) {
      totals[std::to_string(t)] = total_t_intersection(f, t).get_str();
      intersecting[std::to_string(t)] = is_t_intersecting(f, t);
    }
    if (!eval_ts.empty()) {
      out["t_totals"] = totals;
      out["t_intersecting"] = intersecting;
    }
    print_json(out);
  });

  // solve
  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "exact maximum total intersection");
  solve->add_option("--n", sa.n)->required();
  solve->add_option("--k", sa.k)->required();
  solve->add_option("--m", sa.m)->required();
  solve->add_flag("--all-optima", sa.all_optima, "collect all optimal classes");
  solve->add_option("--node-limit", sa.node_limit);
  solve->add_option("--threads", sa.threads, "workers (env TIC_THREADS as fallback)");
  solve->add_option("--csv", sa.csv, "also write a one-row summary table");
  solve->add_flag("--timing", sa.timing, "report wall time on stderr");
  solve->callback([&] { exit_code = run_solve(sa); });

  // solve-distance
  SolveArgs da;
  auto* dist = app.add_subcommand("solve-distance",
                                  "minimum average Hamming distance of a constant-weight code");
  dist->add_option("--n", da.n)->required();
  dist->add_option("--k", da.k)->required();
  dist->add_option("--m", da.m)->required();
  dist->add_option("--node-limit", da.node_limit);
  dist->add_option("--threads", da.threads);
  dist->add_option("--csv", da.csv);
  dist->add_flag("--timing", da.timing);
  dist->callback([&] { exit_code = run_solve_distance(da); });

  // optimize
  auto* opt = app.add_subcommand("optimize", "replacement-move local search");
  std::string opt_family, opt_trace, opt_pool = "all", opt_random;
  long opt_moves = 1'000'000;
  int opt_threads = 0, opt_restarts = 1;
  std::uint64_t opt_seed = 0;
  opt->add_option("--family", opt_family, "start family JSON file");
  opt->add_option("--random", opt_random, "random start, n,k,m");
  opt->add_option("--moves", opt_moves, "move budget");
  opt->add_option("--pool", opt_pool)->check(CLI::IsMember({"all", "lex"}));
  opt->add_option("--threads", opt_threads);
  opt->add_option("--restarts", opt_restarts, "independent random starts");
  opt->add_option("--seed", opt_seed);
  opt->add_option("--trace", opt_trace, "write moves as JSON lines");
  opt->callback([&] {
    if (opt_family.empty() == opt_random.empty())
      throw std::invalid_argument("need exactly one of --family / --random");
    if (opt_restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (opt_restarts > 1 && opt_random.empty())
      throw std::invalid_argument("--restarts needs --random");
    CandidatePool pool = opt_pool == "lex" ? CandidatePool::kLexLevel : CandidatePool::kAll;
    int threads = resolve_threads(opt_threads);
    std::mt19937_64 rng(opt_seed);
    std::optional<LocalSearchResult> best;
    BigInt best_initial = 0;
    json restart_log = json::array();
    for (int run = 0; run < opt_restarts; ++run) {
      SetFamily start;
      if (!opt_family.empty()) {
        start = load_family(opt_family);
      } else {
        std::vector<int> nums = parse_core(opt_random);
        if (nums.size() != 3) throw std::invalid_argument("--random wants n,k,m");
        start = random_family(nums[0], nums[1], static_cast<std::uint64_t>(nums[2]), rng);
      }
      BigInt initial = total_intersection(start);
      LocalSearchResult res = local_search(std::move(start), opt_moves, pool, threads);
      BigInt final_value = total_intersection(res.family);
      restart_log.push_back(json{{"initial", initial.get_str()},
                                 {"final", final_value.get_str()},
                                 {"moves", res.trace.size()}});
      if (!best || final_value > total_intersection(best->family)) {
        best = std::move(res);
        best_initial = initial;
      }
    }
    if (!opt_trace.empty()) {
      std::ofstream out(opt_trace);
      if (!out) throw std::runtime_error("cannot open " + opt_trace);
      for (const Move& mv : best->trace) out << move_to_json(mv).dump() << "\n";
    }
    json out{{"initial", best_initial.get_str()},
             {"final", total_intersection(best->family).get_str()},
             {"moves", best->trace.size()},
             {"family", family_to_json(best->family)}};
    if (opt_restarts > 1) out["restarts"] = restart_log;
    print_json(out);
  });

  // shift
  auto* shift_cmd = app.add_subcommand("shift", "apply S_{i,j} or the full compression");
  std::string shift_family;
  int shift_i = 0, shift_j = 0;
  bool shift_compress = false;
  shift_cmd->add_option("--family", shift_family)->required();
  shift_cmd->add_option("--i", shift_i, "element to replace");
  shift_cmd->add_option("--j", shift_j, "replacement element");
  shift_cmd->add_flag("--compress", shift_compress, "iterate all S_{i,j}, j < i, to a fixpoint");
  shift_cmd->callback([&] {
    SetFamily f = load_family(shift_family);
    if (shift_compress) {
      if (shift_i || shift_j)
        throw std::invalid_argument("--compress excludes --i/--j");
      print_json(family_to_json(compress(f)));
    } else {
      if (!shift_i || !shift_j)
        throw std::invalid_argument("need --i and --j, or --compress");
      print_json(family_to_json(shift(f, shift_i, shift_j)));
    }
  });

  // canon
  auto* canon = app.add_subcommand("canon", "canonical form under relabeling");
  std::string canon_family;
  canon->add_option("--family", canon_family)->required();
  canon->callback([&] {
    CanonicalForm c = canonical_form(load_family(canon_family));
    print_json(json{{"family", family_to_json(c.family)}, {"perm", c.perm}});
  });

  // verify
  auto* verify = app.add_subcommand("verify", "structural checks with a three-valued verdict");
  verify->require_subcommand(1);
  std::string verify_family;
  int verify_t = 1, verify_s = 1, verify_max = 0;
  long verify_r = 0;
  auto* v_sand = verify->add_subcommand("sandwich", "L^(r) <= F <= L^(r+1) up to relabeling");
  v_sand->add_option("--family", verify_family)->required();
  v_sand->add_option("--t", verify_t)->required();
  v_sand->add_option("--r", verify_r)->required();
  v_sand->callback([&] {
    SetFamily f = load_family(verify_family);
    BigInt lo = level_prefix_sum(f.n, f.k, verify_t, verify_r);
    BigInt hi = level_prefix_sum(f.n, f.k, verify_t, verify_r + 1);
    BigInt size(static_cast<long>(f.size()));
    json out{{"t", verify_t}, {"r", verify_r}, {"size", size.get_str()},
             {"range_lo", lo.get_str()}, {"range_hi", hi.get_str()}};
    if (size < lo || size > hi) {
      out["verdict"] = "not-applicable";
      out["reason"] = "family size outside [|L^(r)|, |L^(r+1)|]";
    } else {
      out["verdict"] = verify_sandwich(f, verify_t, verify_r) ? "holds" : "fails";
    }
    print_json(out);
  });

  auto* v_tint = verify->add_subcommand("tintersect", "every two members share >= t elements");
  v_tint->add_option("--family", verify_family)->required();
  v_tint->add_option("--t", verify_t)->required();
  v_tint->callback([&] {
    SetFamily f = load_family(verify_family);
    print_json(json{{"t", verify_t},
                    {"verdict", is_t_intersecting(f, verify_t) ? "holds" : "fails"}});
  });

  auto* v_cover = verify->add_subcommand("cover", "small vertex set meeting every member s times");
  v_cover->add_option("--family", verify_family)->required();
  v_cover->add_option("--s", verify_s)->required();
  v_cover->add_option("--max-size", verify_max)->required();
  v_cover->callback([&] {
    SetFamily f = load_family(verify_family);
    auto cover = min_s_cover(f, verify_s, verify_max);
    json out{{"s", verify_s}, {"max_size", verify_max}};
    out["verdict"] = cover ? "holds" : "fails";
    out["cover"] = cover ? json(*cover) : json();
    print_json(out);
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form bound machinery");
  bounds->require_subcommand(1);
  BoundArgs ba;

  auto* b_t1 = bounds->add_subcommand("t1", "upper bound for I at a (r, delta) size, t = 1");
  b_t1->add_option("--n", ba.n)->required();
  b_t1->add_option("--k", ba.k)->required();
  b_t1->add_option("--r", ba.r)->required();
  b_t1->add_option("--delta", ba.delta)->required();
  b_t1->add_option("--csv", ba.csv);
  b_t1->callback([&] {
    BoundReport r = upper_bound_t1(ba.n, ba.k, ba.r, parse_rational(ba.delta));
    print_json(bound_report_to_json(r));
    if (!ba.csv.empty()) write_csv(ba.csv, {csv_from_bound(r)});
  });

  auto* b_gen = bounds->add_subcommand("general", "upper bound for I, any t >= 2");
  b_gen->add_option("--n", ba.n)->required();
  b_gen->add_option("--k", ba.k)->required();
  b_gen->add_option("--t", ba.t)->required();
  b_gen->add_option("--r", ba.r)->required();
  b_gen->add_option("--delta", ba.delta)->required();
  b_gen->add_option("--m", ba.m, "family size; default follows from (t,r,delta)");
  b_gen->add_option("--csv", ba.csv);
  b_gen->callback([&] {
    Rational delta = parse_rational(ba.delta);
    BigInt m;
    if (ba.m.empty()) {
      SizeDecomposition d;
      d.t = ba.t;
      d.r = ba.r;
      d.delta = delta;
      m = recompose_size(ba.n, ba.k, d);
    } else {
      m = BigInt(ba.m);
    }
    BoundReport r = upper_bound_general(ba.n, ba.k, ba.t, ba.r, delta, m);
    print_json(bound_report_to_json(r));
    if (!ba.csv.empty()) write_csv(ba.csv, {csv_from_bound(r)});
  });

  auto* b_cvx = bounds->add_subcommand("convexmax", "max sum of squares in a box with fixed sum");
  b_cvx->add_option("--a", ba.a, "lower box edge (rational)")->required();
  b_cvx->add_option("--b", ba.b, "upper box edge (rational)")->required();
  b_cvx->add_option("--sum", ba.sum, "fixed coordinate sum (rational)")->required();
  b_cvx->add_option("--vars", ba.vars, "number of variables")->required();
  b_cvx->callback([&] {
    ConvexMaxResult r = convex_max(parse_rational(ba.a), parse_rational(ba.b),
                                   parse_rational(ba.sum), ba.vars);
    json witness = json::array();
    for (const Rational& x : r.witness) witness.push_back(rational_to_string(x));
    print_json(json{{"value", rational_to_string(r.value)},
                    {"witness", witness},
                    {"r0", r.r0}});
  });

  auto* b_hyp = bounds->add_subcommand("hypotheses", "ground-set and delta ranges the theory needs");
  b_hyp->add_option("--n", ba.n)->required();
  b_hyp->add_option("--k", ba.k)->required();
  b_hyp->add_option("--t", ba.t)->required();
  b_hyp->add_option("--r", ba.r)->required();
  b_hyp->add_option("--delta", ba.delta)->required();
  b_hyp->add_option("--csv", ba.csv);
  b_hyp->callback([&] {
    HypothesisReport h = hypothesis_report(ba.n, ba.k, ba.t, ba.r, parse_rational(ba.delta));
    print_json(hypothesis_report_to_json(h));
    if (!ba.csv.empty()) write_csv(ba.csv, {csv_from_hypotheses(h)});
  });

  auto* b_union = bounds->add_subcommand("starunion", "minimum union size of r full t-stars");
  b_union->add_option("--n", ba.n)->required();
  b_union->add_option("--k", ba.k)->required();
  b_union->add_option("--t", ba.t)->required();
  b_union->add_option("--r", ba.r)->required();
  b_union->callback([&] {
    StarUnionMinimum m = min_star_union_size(ba.n, ba.k, ba.t, ba.r);
    json classes = json::array();
    for (const SetFamily& f : m.core_classes) classes.push_back(family_to_json(f));
    print_json(json{{"min_size", m.min_size.get_str()}, {"core_classes", classes}});
  });

  // convert
  auto* convert = app.add_subcommand("convert", "family <-> constant-weight code");
  convert->require_subcommand(1);
  std::string conv_family, conv_words, conv_convention = "ordered";
  auto* cv_avg = convert->add_subcommand("avgdist", "average Hamming distance of a family's code");
  cv_avg->add_option("--family", conv_family)->required();
  cv_avg->add_option("--convention", conv_convention)
      ->check(CLI::IsMember({"ordered", "unordered"}));
  cv_avg->callback([&] {
    SetFamily f = load_family(conv_family);
    PairConvention conv = conv_convention == "unordered"
                              ? PairConvention::kUnordered
                              : PairConvention::kOrderedDistinct;
    AverageDistance d = average_distance(f, conv);
    print_json(json{{"mean", rational_to_string(d.mean)},
                    {"total", d.total.get_str()},
                    {"pair_count", d.pair_count.get_str()},
                    {"convention", conv_convention}});
  });

  auto* cv_code = convert->add_subcommand("code", "characteristic-vector codewords");
  cv_code->add_option("--family", conv_family, "family JSON -> words on stdout");
  cv_code->add_option("--words", conv_words, "word file -> family JSON on stdout");
  cv_code->callback([&] {
    if (conv_family.empty() == conv_words.empty())
      throw std::invalid_argument("need exactly one of --family / --words");
    if (!conv_family.empty()) {
      ConstantWeightCode code = to_code(load_family(conv_family));
      for (const std::string& w : code.words) std::cout << w << "\n";
    } else {
      std::ifstream in(conv_words);
      if (!in) throw std::runtime_error("cannot open " + conv_words);
      ConstantWeightCode code;
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty()) code.words.push_back(line);
      }
      if (code.words.empty()) throw std::invalid_argument("no words in " + conv_words);
      code.n = static_cast<int>(code.words.front().size());
      code.k = static_cast<int>(
          std::count(code.words.front().begin(), code.words.front().end(), '1'));
      print_json(family_to_json(from_code(code)));
    }
  });

  // run
  auto* runner = app.add_subcommand("run", "grid of instances from a JSON config");
  std::string run_config, run_csv, run_json;
  int run_threads = 0;
  runner->add_option("--config", run_config)->required();
  runner->add_option("--csv", run_csv, "override config csv path");
  runner->add_option("--json", run_json, "override config json path");
  runner->add_option("--threads", run_threads);
  runner->callback([&] { exit_code = run_grid(run_config, run_csv, run_json, run_threads); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
