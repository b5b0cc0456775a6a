#pragma once

// Command-line front end: solve, exact, eval, gen, bench.
//
// Exit codes: 0 ok, 1 usage, 2 parse, 3 validation, 4 size cap,
// 5 approximation bound violated (bench).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "drobust/corpus.hpp"
#include "drobust/error.hpp"
#include "drobust/evaluate.hpp"
#include "drobust/generate.hpp"
#include "drobust/instance_io.hpp"
#include "drobust/oracle.hpp"
#include "drobust/robust_mincut.hpp"
#include "drobust/robust_sp.hpp"

namespace drobust::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kValidation = 3,
  kSizeCap = 4,
  kBoundViolated = 5,
};

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Problem parse_problem(const std::string& s) {
  if (s == "mincut") return Problem::mincut;
  if (s == "sp") return Problem::shortest_path;
  throw UsageError("unknown problem '" + s + "'");
}

inline SteinerMethod parse_steiner(const std::string& s) {
  if (s == "mehlhorn") return SteinerMethod::mehlhorn;
  if (s == "exact") return SteinerMethod::exact;
  throw UsageError("unknown Steiner method '" + s + "'");
}

inline std::vector<EdgeId> parse_edge_list(const std::string& s) {
  std::vector<EdgeId> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto tok = drobust::detail::split_ws(item);
    if (tok.empty()) continue;
    auto id = tok.size() == 1 ? drobust::detail::parse_id(tok[0]) : std::nullopt;
    if (!id) throw UsageError("bad edge id '" + item + "'");
    out.push_back(*id);
  }
  return out;
}

inline std::string edge_triples(const Graph& g, const std::vector<EdgeId>& ids) {
  std::string s;
  for (EdgeId e : ids) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + "," + std::to_string(e) + ")";
  }
  return s;
}

inline std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) {
    if (!s.empty()) s += " ";
    s += std::to_string(v);
  }
  return s;
}

inline void write_report(std::ostream& out, const Instance& inst, const EvalReport& rep) {
  out << "first_stage_edges=" << edge_triples(inst.graph, rep.first_stage_edges) << "\n";
  out << "first_stage_cost=" << format_weight(rep.first_stage_cost) << "\n";
  out << "worst_terminal=" << rep.worst_terminal << "\n";
  out << "second_stage_cost=" << format_weight(rep.second_stage_cost) << "\n";
  out << "total=" << format_cost(rep.total_cost) << "\n";
}

inline void write_responses(std::ostream& out, const Instance& inst, const EvalReport& rep) {
  for (const auto& r : rep.per_terminal) {
    out << "response=" << r.terminal << " " << format_weight(r.response_cost) << " "
        << edge_triples(inst.graph, r.response_edges) << "\n";
  }
}

inline std::string solver_name(Problem p, SteinerMethod m) {
  return p == Problem::mincut ? "threshold" : "farthest+" + std::string(to_string(m));
}

inline Rational ratio_bound(Problem p, SteinerMethod m) {
  if (p == Problem::mincut) return Rational::integer(2);
  return Rational::integer(m == SteinerMethod::mehlhorn ? 4 : 3);
}

// Runs one robust solver; fills the first-stage report and counters.
inline EvalReport run_solver(const Instance& inst, SteinerMethod method, CallCounters& counters,
                             std::ostream* trace_out) {
  if (inst.problem == Problem::mincut) {
    auto res = solve_robust_mincut(inst, &counters);
    if (trace_out) {
      auto& o = *trace_out;
      o << "sorted_terminals=";
      for (std::size_t i = 0; i < res.trace.sorted_terminals.size(); ++i) {
        o << (i ? " " : "") << res.trace.sorted_terminals[i].first << ":"
          << format_weight(res.trace.sorted_terminals[i].second);
      }
      o << "\ncandidate_totals=";
      for (std::size_t j = 0; j < res.trace.candidates.size(); ++j) {
        o << (j ? " " : "") << format_cost(res.trace.candidates[j].report.total_cost);
      }
      o << "\nchosen_prefix=" << res.trace.chosen << "\n";
    }
    return res.solution.report;
  }
  auto res = solve_robust_sp(inst, method, &counters);
  if (trace_out) {
    auto& o = *trace_out;
    o << "picks=";
    for (std::size_t i = 0; i < res.trace.picks.size(); ++i) {
      o << (i ? " " : "") << res.trace.picks[i].terminal << ":" << format_weight(res.trace.picks[i].distance);
    }
    o << "\nfinal_S=" << vertex_list(res.trace.final_S) << "\n";
    o << "f=" << format_weight(res.trace.f) << "\n";
    o << "steiner_weight=" << format_weight(res.trace.steiner.weight) << "\n";
    o << "gamma=" << format_ratio(res.trace.steiner.gamma_bound) << "\n";
    auto violations = check_trace(inst, res.trace);
    o << "trace_check=";
    if (violations.empty()) o << "ok";
    for (std::size_t i = 0; i < violations.size(); ++i) o << (i ? "," : "") << to_string(violations[i]);
    o << "\n";
  }
  return res.solution.report;
}

struct BenchRow {
  std::string instance;
  std::string seed;
  Problem problem = Problem::mincut;
  std::string solver;
  Rational apx_total;
  std::optional<Rational> opt_total;
  std::optional<Rational> ratio;  // nullopt with opt present means unbounded (opt = 0 < apx)
  Weight first_stage_cost;
  Weight second_stage_cost;
  CallCounters counters;
  std::uint64_t micros = 0;
  bool size_cap = false;
  std::string error;
};

struct BenchItem {
  std::string id;
  std::string seed;
  Instance instance;
};

inline BenchRow bench_one(const BenchItem& item, SteinerMethod method, bool oracle, std::size_t max_oracle_edges,
                          bool timing) {
  BenchRow row;
  row.instance = item.id;
  row.seed = item.seed;
  row.problem = item.instance.problem;
  row.solver = solver_name(row.problem, method);
  auto t0 = std::chrono::steady_clock::now();
  EvalReport rep = run_solver(item.instance, method, row.counters, nullptr);
  auto t1 = std::chrono::steady_clock::now();
  if (timing) row.micros = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
  row.apx_total = rep.total_cost;
  row.first_stage_cost = rep.first_stage_cost;
  row.second_stage_cost = rep.second_stage_cost;
  if (oracle) {
    if (item.instance.graph.edge_count() > max_oracle_edges) {
      row.size_cap = true;
      return row;
    }
    auto opt = exact_robust(item.instance, max_oracle_edges);
    row.opt_total = opt.optimum_total;
    if (opt.optimum_total.numerator() != 0) {
      row.ratio = row.apx_total / opt.optimum_total;
    } else if (row.apx_total.numerator() == 0) {
      row.ratio = Rational::integer(1);
    }
  }
  return row;
}

inline void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "instance,seed,problem,solver,apx_total,opt_total,ratio,first_stage_cost,second_stage_cost,"
         "flow_calls,dijkstra_calls,micros\n";
  for (const auto& r : rows) {
    out << r.instance << "," << r.seed << "," << to_string(r.problem) << "," << r.solver << ","
        << format_cost(r.apx_total) << "," << (r.opt_total ? format_cost(*r.opt_total) : "") << ",";
    if (r.opt_total) out << (r.ratio ? format_ratio(*r.ratio) : "inf");
    out << "," << format_weight(r.first_stage_cost) << "," << format_weight(r.second_stage_cost) << ","
        << r.counters.flow_calls << "," << r.counters.dijkstra_calls << "," << r.micros << "\n";
  }
}

inline std::vector<BenchItem> load_corpus_dir(const std::string& dir, std::optional<Problem> override,
                                              std::ostream& err) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw UsageError("not a directory: '" + dir + "'");
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchItem> items;
  for (const auto& f : files) {
    Instance inst;
    try {
      inst = parse_instance(read_file(f.string()));
    } catch (const Error&) {
      err << "error: in corpus file " << f.filename().string() << "\n";
      throw;
    }
    if (override) inst.problem = *override;
    items.push_back({f.filename().string(), "", std::move(inst)});
  }
  return items;
}

}  // namespace detail

/// Runs the command line given as argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-stage demand-robust mincut and shortest-path solvers"};
  app.require_subcommand(1);

  std::string input;
  std::string problem_override;
  std::string steiner = "mehlhorn";
  std::string first_stage;
  std::size_t max_oracle_edges = kOracleMaxEdges;

  auto* solve = app.add_subcommand("solve", "Solve an instance with the approximation algorithm");
  solve->add_option("--input", input, "Instance file")->required();
  solve->add_option("--problem", problem_override, "Override the instance problem (mincut|sp)");
  solve->add_option("--steiner", steiner, "Steiner subroutine for sp (mehlhorn|exact)");

  auto* exact = app.add_subcommand("exact", "Exact optimum by enumerating all first-stage edge sets");
  exact->add_option("--input", input, "Instance file")->required();
  exact->add_option("--problem", problem_override, "Override the instance problem (mincut|sp)");
  exact->add_option("--max-oracle-edges", max_oracle_edges, "Edge cap for enumeration (at most 20)");

  auto* eval = app.add_subcommand("eval", "Evaluate a first-stage edge set against the adversary");
  eval->add_option("--input", input, "Instance file")->required();
  eval->add_option("--problem", problem_override, "Override the instance problem (mincut|sp)");
  eval->add_option("--first-stage", first_stage, "Comma-separated edge ids");

  GenSpec spec;
  std::string model = "gnp";
  std::string gen_problem = "mincut";
  std::string lambda_text = "2";
  std::string p_text = "0.5";
  std::string wlo = "1", whi = "10", wstep = "1";
  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("--model", model, "gnp|grid|star|tree");
  gen->add_option("--problem", gen_problem, "mincut|sp");
  gen->add_option("--vertices", spec.vertices, "Vertex count (gnp, star, tree)");
  gen->add_option("--terminals", spec.terminal_count, "Terminal count");
  gen->add_option("--lambda", lambda_text, "Inflation factor (decimal)");
  gen->add_option("--seed", spec.seed, "PRNG seed");
  gen->add_option("--edge-probability", p_text, "gnp edge probability (decimal)");
  gen->add_option("--grid-rows", spec.grid_rows, "Grid rows");
  gen->add_option("--grid-cols", spec.grid_cols, "Grid columns");
  gen->add_option("--chords", spec.chords, "Extra edges for the tree model");
  gen->add_option("--weight-lo", wlo, "Smallest edge weight");
  gen->add_option("--weight-hi", whi, "Largest edge weight");
  gen->add_option("--weight-step", wstep, "Weight granularity");
  gen->add_option("--max-edges", spec.max_edges, "Redraw graphs with more edges (0 = no cap)");

  std::string corpus_dir;
  std::string csv_path;
  std::string bench_model = "mixed";
  std::size_t count = 200;
  std::uint64_t bench_seed = 1;
  bool use_oracle = false;
  bool no_timing = false;
  std::size_t jobs = 1;
  auto* bench = app.add_subcommand("bench", "Benchmark a solver over a corpus and certify its ratio");
  bench->add_option("--corpus", corpus_dir, "Directory of instance files");
  bench->add_option("--problem", problem_override, "mincut|sp (sweep default: mincut)");
  bench->add_option("--steiner", steiner, "Steiner subroutine for sp (mehlhorn|exact)");
  bench->add_option("--model", bench_model, "Sweep model: mixed|gnp|grid|star|tree");
  bench->add_option("--count", count, "Sweep size");
  bench->add_option("--seed", bench_seed, "Sweep base seed");
  bench->add_option("--vertices", spec.vertices, "Sweep vertex count (non-mixed models)");
  bench->add_option("--terminals", spec.terminal_count, "Sweep terminal count (non-mixed models)");
  bench->add_option("--lambda", lambda_text, "Sweep inflation factor (non-mixed models)");
  bench->add_flag("--oracle", use_oracle, "Compare against the exact optimum");
  bench->add_option("--csv", csv_path, "Write CSV here instead of standard output");
  bench->add_option("--max-oracle-edges", max_oracle_edges, "Edge cap for the oracle (at most 20)");
  bench->add_option("--jobs", jobs, "Worker threads");
  bench->add_flag("--no-timing", no_timing, "Report 0 in the micros column");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  auto load = [&]() {
    Instance inst = parse_instance(detail::read_file(input));
    if (!problem_override.empty()) inst.problem = detail::parse_problem(problem_override);
    for (const auto& w : instance_warnings(inst)) err << "warning: " << w << "\n";
    return inst;
  };

  try {
    if (max_oracle_edges > kOracleMaxEdges) {
      throw detail::UsageError("--max-oracle-edges is capped at 20");
    }

    if (solve->parsed()) {
      Instance inst = load();
      SteinerMethod method = detail::parse_steiner(steiner);
      CallCounters counters;
      std::ostringstream trace;
      EvalReport rep = detail::run_solver(inst, method, counters, &trace);
      out << "command=solve\n";
      out << "problem=" << to_string(inst.problem) << "\n";
      out << "solver=" << detail::solver_name(inst.problem, method) << "\n";
      out << "lambda=" << format_inflation(inst.lambda) << "\n";
      detail::write_report(out, inst, rep);
      out << trace.str();
      out << "flow_calls=" << counters.flow_calls << "\n";
      out << "dijkstra_calls=" << counters.dijkstra_calls << "\n";
      return kOk;
    }

    if (exact->parsed()) {
      Instance inst = load();
      auto res = exact_robust(inst, max_oracle_edges);
      out << "command=exact\n";
      out << "problem=" << to_string(inst.problem) << "\n";
      out << "lambda=" << format_inflation(inst.lambda) << "\n";
      out << "optimum_total=" << format_cost(res.optimum_total) << "\n";
      out << "subsets_examined=" << res.subsets_examined << "\n";
      detail::write_report(out, inst, res.report);
      return kOk;
    }

    if (eval->parsed()) {
      Instance inst = load();
      auto ids = detail::parse_edge_list(first_stage);
      EvalReport rep;
      try {
        rep = evaluate(inst, ids);
      } catch (const Error& e) {
        if (e.code() == Errc::invalid_edge_id) throw detail::UsageError(e.what());
        throw;
      }
      out << "command=eval\n";
      out << "problem=" << to_string(inst.problem) << "\n";
      out << "lambda=" << format_inflation(inst.lambda) << "\n";
      detail::write_report(out, inst, rep);
      detail::write_responses(out, inst, rep);
      return kOk;
    }

    if (gen->parsed()) {
      if (model == "gnp") spec.model = GenModel::gnp;
      else if (model == "grid") spec.model = GenModel::grid;
      else if (model == "star") spec.model = GenModel::star;
      else if (model == "tree") spec.model = GenModel::tree_plus_chords;
      else throw detail::UsageError("unknown model '" + model + "'");
      spec.problem = detail::parse_problem(gen_problem);
      auto lambda = parse_inflation(lambda_text);
      auto p = parse_weight(p_text);
      auto lo = parse_weight(wlo), hi = parse_weight(whi), step = parse_weight(wstep);
      if (!lambda || !p || !lo || !hi || !step) throw detail::UsageError("bad decimal flag value");
      spec.lambda = *lambda;
      spec.edge_probability_micros = p->micros;
      spec.weight_lo = *lo;
      spec.weight_hi = *hi;
      spec.weight_step = *step;
      try {
        out << serialize_instance(generate(spec));
      } catch (const Error& e) {
        if (e.code() == Errc::infeasible_spec) throw detail::UsageError(e.what());
        throw;
      }
      return kOk;
    }

    if (bench->parsed()) {
      SteinerMethod method = detail::parse_steiner(steiner);
      std::vector<detail::BenchItem> items;
      if (!corpus_dir.empty()) {
        std::optional<Problem> override;
        if (!problem_override.empty()) override = detail::parse_problem(problem_override);
        items = detail::load_corpus_dir(corpus_dir, override, err);
      } else {
        Problem problem = problem_override.empty() ? Problem::mincut : detail::parse_problem(problem_override);
        if (bench_model == "mixed") {
          for (auto& e : certification_corpus(count, bench_seed, problem)) {
            items.push_back({e.id, std::to_string(e.seed), std::move(e.instance)});
          }
        } else {
          GenSpec s = spec;
          if (bench_model == "gnp") s.model = GenModel::gnp;
          else if (bench_model == "grid") s.model = GenModel::grid;
          else if (bench_model == "star") s.model = GenModel::star;
          else if (bench_model == "tree") s.model = GenModel::tree_plus_chords;
          else throw detail::UsageError("unknown model '" + bench_model + "'");
          auto lambda = parse_inflation(lambda_text);
          if (!lambda) throw detail::UsageError("bad --lambda");
          s.lambda = *lambda;
          s.problem = problem;
          for (std::size_t i = 0; i < count; ++i) {
            s.seed = bench_seed + i;
            items.push_back({std::string(to_string(s.model)) + "-" + std::to_string(i), std::to_string(s.seed),
                             generate(s)});
          }
        }
      }

      std::vector<detail::BenchRow> rows(items.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
          try {
            rows[i] = detail::bench_one(items[i], method, use_oracle, max_oracle_edges, !no_timing);
          } catch (const std::exception& e) {
            rows[i].instance = items[i].id;
            rows[i].error = e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t k = 1; k < std::max<std::size_t>(jobs, 1); ++k) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();

      for (const auto& r : rows) {
        if (!r.error.empty()) {
          err << "error: instance " << r.instance << ": " << r.error << "\n";
          return kValidation;
        }
        if (r.size_cap) {
          err << "error: instance " << r.instance << " exceeds the oracle cap of " << max_oracle_edges
              << " edges\n";
          return kSizeCap;
        }
      }

      std::ofstream csv_file;
      std::ostream* csv = &out;
      if (!csv_path.empty()) {
        csv_file.open(csv_path, std::ios::binary);
        if (!csv_file) throw detail::UsageError("cannot write '" + csv_path + "'");
        csv = &csv_file;
      }
      detail::write_csv(*csv, rows);

      std::ostream& summary = csv_path.empty() ? err : out;
      const auto bound = detail::ratio_bound(items.empty() ? Problem::mincut : rows.front().problem, method);
      summary << "summary instances=" << rows.size();
      if (!rows.empty()) summary << " problem=" << to_string(rows.front().problem) << " solver=" << rows.front().solver;
      if (!use_oracle) {
        summary << " oracle=off\n";
        return kOk;
      }
      bool unbounded = false;
      std::optional<Rational> max_ratio;
      for (const auto& r : rows) {
        if (!r.ratio) {
          unbounded = true;
          continue;
        }
        if (!max_ratio || *r.ratio > *max_ratio) max_ratio = r.ratio;
      }
      summary << " max_ratio=" << (unbounded ? "inf" : max_ratio ? format_ratio(*max_ratio) : "-")
              << " bound=" << format_ratio(bound);
      bool ok = !unbounded && (!max_ratio || *max_ratio <= bound);
      summary << " status=" << (ok ? "ok" : "VIOLATED") << "\n";
      return ok ? kOk : kBoundViolated;
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::too_large:
      case Errc::exact_too_large:
      case Errc::too_many_terminals:
        return kSizeCap;
      case Errc::invalid_instance:
      case Errc::wrong_problem:
      case Errc::connectivity_retries_exceeded:
        return kValidation;
      default:
        return kUsage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  return kUsage;
}

}  // namespace drobust::cli
