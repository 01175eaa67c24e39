#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netres/bounds.hpp"
#include "netres/connectivity.hpp"
#include "netres/generators.hpp"

namespace netres {

enum class OutputFormat { json, csv, markdown };
enum class InputFormat { edges, facets };

OutputFormat parse_output_format(const std::string& s);

struct AnalysisConfig {
  // Exactly one of input_path / gen is set.
  std::optional<std::string> input_path;
  std::optional<GraphSpec> gen;
  InputFormat input_format = InputFormat::edges;
  std::vector<std::size_t> k_values;
  std::size_t max_dim = 3;
  std::vector<BoundVariant> variants{BoundVariant::statement_vol_over_2};
  std::vector<CutMode> modes{CutMode::size_bounded};
  L2kMode l2k_mode = L2kMode::second_smallest;
  SearchBudget budget;
  double kernel_tol = kDefaultKernelTol;
};

// Throws ValidationError naming the offending field.
void validate(const AnalysisConfig& config);

struct AnalysisRow {
  std::size_t k = 0;
  double lambda2 = 0.0;
  std::int64_t beta0 = 0;
  std::int64_t beta1 = 0;
  std::optional<std::int64_t> beta2;     // absent when max_dim < 2
  double lambda2_1 = 0.0;
  std::optional<double> lambda2_2;       // absent when max_dim < 2
  std::vector<BoundReport> bounds;       // one per configured variant
};

struct AnalysisReport {
  std::string source;
  Graph graph;
  AnalysisConfig config;
  BettiProfile betti;
  std::vector<AnalysisRow> rows;
};

AnalysisReport analyze(const AnalysisConfig& config);

std::string to_json(const AnalysisReport& r);
// One line per (k, variant, cut mode).
std::string to_csv(const AnalysisReport& r);
std::string to_markdown(const AnalysisReport& r);
std::string render(const AnalysisReport& r, OutputFormat f);

inline constexpr const char* kAnalysisCsvHeader =
    "k,lambda2,beta0,beta1,beta2,lambda2_1,lambda2_2,variant,cut_mode,"
    "l2k_mode,term1,term2,bound,actual,upper_bound,proven_optimal,violated";

struct SweepConfig {
  GraphSpec base;  // random family; seed is ignored
  // Parameter to sweep ("p", "d", "beta", "k" or "n"); empty sweeps nothing.
  std::string param;
  std::vector<double> values;
  // When set, values are multiples of log(n)/n.
  bool values_logn = false;
  std::size_t seeds = 20;
  std::uint64_t master_seed = 0;
  std::vector<std::size_t> k_values;
  std::size_t max_dim = 3;
  std::vector<BoundVariant> variants{BoundVariant::statement_vol_over_2};
  std::vector<CutMode> modes{CutMode::size_bounded};
  L2kMode l2k_mode = L2kMode::second_smallest;
  SearchBudget budget;
  double kernel_tol = kDefaultKernelTol;
  std::size_t jobs = 0;  // 0: hardware concurrency
};

void validate(const SweepConfig& config);

// Seed for the i-th sample of a sweep.
std::uint64_t sweep_seed(std::uint64_t master, std::size_t index);

struct Stat {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct SweepRow {
  std::string family;
  std::size_t n = 0;
  std::string param;
  double value = 0.0;  // absolute parameter value
  std::size_t k = 0;
  BoundVariant variant{};
  CutMode mode{};
  L2kMode l2k_mode{};
  std::size_t seeds = 0;
  Stat bound;
  std::optional<Stat> actual;  // absent when no seed had a cut (k > n)
  double optimal_fraction = 0.0;
  Stat prediction;
  std::optional<double> ratio;        // mean actual / mean prediction
  std::optional<double> ratio_bound;  // mean actual / mean bound
  std::optional<double> violation_fraction;
  std::optional<double> threshold;    // log(n)/n, Erdos-Renyi only
  std::optional<bool> above_threshold;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;
};

// Seeds are processed by a pool of config.jobs workers and merged in seed
// order, so output depends only on the config (given budgets that are not
// hit by the wall-clock limit).
SweepReport sweep(const SweepConfig& config);

inline constexpr const char* kSweepCsvHeader =
    "family,n,param,value,k,variant,cut_mode,l2k_mode,seeds,bound_mean,"
    "bound_min,bound_max,actual_mean,actual_min,actual_max,optimal_fraction,"
    "prediction_mean,prediction_min,prediction_max,ratio,ratio_bound,"
    "violation_fraction,threshold,above_threshold";

std::string to_json(const SweepReport& r);
std::string to_csv(const SweepReport& r);
std::string to_markdown(const SweepReport& r);
std::string render(const SweepReport& r, OutputFormat f);

// Small-graph corpus: deterministic graphs from every family with
// n <= max_n and |E| <= max_edges.
std::vector<CorpusEntry> small_graph_corpus(std::size_t max_n = 8,
                                            std::size_t max_edges = 20,
                                            std::size_t random_seeds = 6);

struct OracleCheckSummary {
  std::size_t graphs = 0;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;
};

// Compares lambda_s against the exhaustive oracle on every corpus graph,
// every k in 2..n, both modes, and validates witnesses.
OracleCheckSummary oracle_check(const std::vector<CorpusEntry>& corpus,
                                const SearchBudget& budget = {});

// Formats with 12 significant digits.
std::string format_number(double x);
// Rounds to 12 significant digits (what format_number prints).
double round_sig12(double x);

}  // namespace netres
