// netres: spectral, homological and combinatorial resilience measures of
// undirected graphs.
//
//   netres analyze --gen complete:n=3 --k 2..3 --format markdown
//   netres analyze --input grid.txt --k 2 --cut-mode both --format json
//   netres sweep --gen er:n=24 --param p --values-logn 0.5,1,2 --seeds 20 --k 3
//   netres oracle-check
//   netres --ledger

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "netres/error.hpp"
#include "netres/harness.hpp"

namespace {

using namespace netres;

std::vector<std::size_t> parse_k_values(const std::vector<std::string>& raw) {
  std::vector<std::size_t> out;
  auto to_size = [](const std::string& s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw ValidationError("k_values: '" + s + "' is not an integer");
    return v;
  };
  for (const auto& item : raw) {
    std::stringstream ss(item);
    for (std::string part; std::getline(ss, part, ',');) {
      if (part.empty()) continue;
      if (auto dots = part.find(".."); dots != std::string::npos) {
        auto lo = to_size(part.substr(0, dots));
        auto hi = to_size(part.substr(dots + 2));
        if (lo > hi) throw ValidationError("k_values: empty range '" + part + "'");
        for (auto k = lo; k <= hi; ++k) out.push_back(k);
      } else {
        out.push_back(to_size(part));
      }
    }
  }
  return out;
}

std::vector<double> parse_reals(const std::string& text,
                                const std::string& field) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw ValidationError(field + ": '" + part + "' is not a number");
    out.push_back(v);
  }
  return out;
}

std::vector<BoundVariant> parse_variants(const std::string& s) {
  if (s == "statement") return {BoundVariant::statement_vol_over_2};
  if (s == "proof") return {BoundVariant::proof_vol_over_2k};
  return {BoundVariant::statement_vol_over_2, BoundVariant::proof_vol_over_2k};
}

std::vector<CutMode> parse_modes(const std::string& s) {
  if (s == "size") return {CutMode::size_bounded};
  if (s == "count") return {CutMode::component_count};
  return {CutMode::size_bounded, CutMode::component_count};
}

L2kMode parse_l2k(const std::string& s) {
  return s == "nonzero" ? L2kMode::smallest_nonzero : L2kMode::second_smallest;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + out_path + "'");
  out << text;
}

struct CommonOptions {
  std::vector<std::string> k_raw;
  std::size_t max_dim = 3;
  std::string variant = "statement";
  std::string cut_mode = "size";
  std::string l2k = "second";
  std::string format = "markdown";
  std::string out;
  std::optional<std::uint64_t> seed;
  std::uint64_t node_budget = SearchBudget{}.max_nodes;
  double time_budget = 60.0;

  void attach(CLI::App* app) {
    app->add_option("--k", k_raw,
                    "k values; repeatable, comma lists or ranges like 2..5")
        ->required();
    app->add_option("--max-dim", max_dim, "Clique complex dimension")
        ->capture_default_str();
    app->add_option("--variant", variant, "Bound variant")
        ->check(CLI::IsMember({"statement", "proof", "both"}))
        ->capture_default_str();
    app->add_option("--cut-mode", cut_mode, "k-component semantics")
        ->check(CLI::IsMember({"size", "count", "both"}))
        ->capture_default_str();
    app->add_option("--l2k", l2k, "lambda2^(k) reading")
        ->check(CLI::IsMember({"second", "nonzero"}))
        ->capture_default_str();
    app->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}))
        ->capture_default_str();
    app->add_option("--out", out, "Write the report here instead of stdout");
    app->add_option("--seed", seed, "Seed for random families");
    app->add_option("--node-budget", node_budget,
                    "Search node limit per (graph, k)")
        ->capture_default_str();
    app->add_option("--time-budget", time_budget,
                    "Search time limit per (graph, k), seconds")
        ->capture_default_str();
  }

  SearchBudget budget() const {
    if (!(time_budget > 0)) throw ValidationError("time_budget: must be > 0");
    return {node_budget, std::chrono::milliseconds(
                             static_cast<std::int64_t>(time_budget * 1000.0))};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral, homological and combinatorial resilience of graphs"};
  app.require_subcommand(0, 1);
  bool show_ledger = false;
  app.add_flag("--ledger", show_ledger,
               "Print the discrepancy notes and column conventions");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one graph");
  CommonOptions analyze_opts;
  std::string input, gen, input_format = "edges";
  analyze_opts.attach(analyze_cmd);
  auto* input_opt =
      analyze_cmd->add_option("--input", input, "Edge-list or facet-list file");
  auto* gen_opt = analyze_cmd->add_option(
      "--gen", gen, "Graph spec, e.g. er:n=100,p=0.05,seed=7");
  input_opt->excludes(gen_opt);
  analyze_cmd->add_option("--input-format", input_format, "Input file format")
      ->check(CLI::IsMember({"edges", "facets"}))
      ->capture_default_str();

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Aggregate bounds over a random family");
  CommonOptions sweep_opts;
  std::string sweep_gen, param, values, values_logn;
  std::size_t seeds = 20, jobs = 0;
  sweep_opts.attach(sweep_cmd);
  sweep_cmd->add_option("--gen", sweep_gen, "Random family template")
      ->required();
  sweep_cmd->add_option("--param", param, "Parameter to sweep (p, d, beta, k, n)");
  auto* values_opt =
      sweep_cmd->add_option("--values", values, "Comma-separated values");
  auto* logn_opt = sweep_cmd->add_option(
      "--values-logn", values_logn, "Comma-separated multiples of log(n)/n");
  values_opt->excludes(logn_opt);
  sweep_cmd->add_option("--seeds", seeds, "Samples per value")
      ->capture_default_str();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads (0: all cores)")
      ->capture_default_str();

  // oracle-check
  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "Compare exact search against exhaustive enumeration");
  std::size_t oracle_max_n = 8, oracle_max_edges = 20, oracle_seeds = 6;
  oracle_cmd->add_option("--max-n", oracle_max_n)->capture_default_str();
  oracle_cmd->add_option("--max-edges", oracle_max_edges)
      ->check(CLI::Range(std::size_t{0}, kOracleMaxEdges))
      ->capture_default_str();
  oracle_cmd->add_option("--random-seeds", oracle_seeds)->capture_default_str();
  bool oracle_verbose = false;
  oracle_cmd->add_flag("--verbose", oracle_verbose, "List every failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; usage errors share the exit code of
    // validation errors.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (show_ledger) {
      std::cout << discrepancy_ledger();
      if (app.get_subcommands().empty()) return 0;
    }
    if (*analyze_cmd) {
      AnalysisConfig cfg;
      if (!input.empty()) cfg.input_path = input;
      if (!gen.empty()) {
        cfg.gen = parse_graph_spec(gen);
        if (analyze_opts.seed) cfg.gen->seed = *analyze_opts.seed;
      }
      cfg.input_format =
          input_format == "facets" ? InputFormat::facets : InputFormat::edges;
      cfg.k_values = parse_k_values(analyze_opts.k_raw);
      cfg.max_dim = analyze_opts.max_dim;
      cfg.variants = parse_variants(analyze_opts.variant);
      cfg.modes = parse_modes(analyze_opts.cut_mode);
      cfg.l2k_mode = parse_l2k(analyze_opts.l2k);
      cfg.budget = analyze_opts.budget();
      auto report = analyze(cfg);
      emit(render(report, parse_output_format(analyze_opts.format)),
           analyze_opts.out);
    } else if (*sweep_cmd) {
      SweepConfig cfg;
      cfg.base = parse_graph_spec(sweep_gen);
      cfg.param = param;
      if (!values.empty()) cfg.values = parse_reals(values, "values");
      if (!values_logn.empty()) {
        cfg.values = parse_reals(values_logn, "values_logn");
        cfg.values_logn = true;
      }
      cfg.seeds = seeds;
      cfg.master_seed = sweep_opts.seed.value_or(0);
      cfg.k_values = parse_k_values(sweep_opts.k_raw);
      cfg.max_dim = sweep_opts.max_dim;
      cfg.variants = parse_variants(sweep_opts.variant);
      cfg.modes = parse_modes(sweep_opts.cut_mode);
      cfg.l2k_mode = parse_l2k(sweep_opts.l2k);
      cfg.budget = sweep_opts.budget();
      cfg.jobs = jobs;
      auto report = sweep(cfg);
      emit(render(report, parse_output_format(sweep_opts.format)),
           sweep_opts.out);
    } else if (*oracle_cmd) {
      auto corpus =
          small_graph_corpus(oracle_max_n, oracle_max_edges, oracle_seeds);
      auto summary = oracle_check(corpus);
      std::cout << "graphs: " << summary.graphs << "\n"
                << "cases: " << summary.cases << "\n"
                << "pass: " << summary.passed << "\n"
                << "fail: " << summary.failures.size() << "\n";
      if (oracle_verbose)
        for (const auto& f : summary.failures) std::cout << "  " << f << "\n";
      return summary.failures.empty() ? 0 : 1;
    } else if (!show_ledger) {
      std::cerr << app.help();
      return 2;
    }
  } catch (const netres::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
