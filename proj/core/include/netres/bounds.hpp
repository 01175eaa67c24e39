#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netres/connectivity.hpp"
#include "netres/graph.hpp"
#include "netres/spectral.hpp"
#include "netres/topology.hpp"

namespace netres {

// Which second term of the spectral-homological bound to use.
//   statement_vol_over_2: lambda2^(k-1) * vol / 2
//   proof_vol_over_2k:    lambda2^(k-1) * vol / (2k)
enum class BoundVariant { statement_vol_over_2, proof_vol_over_2k };

std::string to_string(BoundVariant v);

// Quantities shared by every (k, variant) evaluated on one graph.
struct GraphInvariants {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t vol = 0;
  double lambda2 = 0.0;  // 0 when n < 2
  BettiProfile betti;
  std::vector<Spectrum> hodge;  // hodge[k] for k = 0..max_dim
  double kernel_tol = kDefaultKernelTol;

  double lambda2_k(std::size_t k, L2kMode mode) const;
};

GraphInvariants compute_invariants(const Graph& g, const SimplicialComplex& c,
                                   double kernel_tol = kDefaultKernelTol);

struct ActualCuts {
  std::optional<CutResult> size_bounded;
  std::optional<CutResult> component_count;

  const std::optional<CutResult>& get(CutMode mode) const {
    return mode == CutMode::size_bounded ? size_bounded : component_count;
  }
};

struct BoundReport {
  std::size_t k = 0;
  BoundVariant variant = BoundVariant::statement_vol_over_2;
  L2kMode l2k_mode = L2kMode::second_smallest;
  double lambda2 = 0.0;
  std::int64_t beta0 = 0;
  std::int64_t beta_km1 = 0;
  double lambda2_km1 = 0.0;
  std::uint64_t vol = 0;
  double term1 = 0.0;
  double term2 = 0.0;
  double bound = 0.0;
  ActualCuts actual;

  // True when bound > actual + 1e-9. Known when the actual cut is optimal,
  // or when the bound already exceeds a non-optimal upper bound.
  std::optional<bool> violated(CutMode mode) const;
};

inline constexpr double kViolationTol = 1e-9;

// Evaluates the bound; never asserts it. term1 uses min(beta_{k-1}/beta_0, 1)
// as written (beta_{k-1} = 0 gives 0). term2 is computed as
// q = lambda2^(k-1) * vol / (2k) for the proof variant and k * q for the
// statement variant, so the two differ by exactly a factor of k.
// Throws ValidationError for k < 2 or k - 1 > complex dimension.
BoundReport theorem34_bound(const GraphInvariants& inv, std::size_t k,
                            BoundVariant variant, L2kMode l2k_mode,
                            ActualCuts actual = {});

BoundReport theorem34_bound(const Graph& g, const SimplicialComplex& c,
                            std::size_t k, BoundVariant variant,
                            L2kMode l2k_mode, ActualCuts actual = {});

// n * p * min(1/beta_{k-1}, 1); beta_{k-1} = 0 is read as min(inf, 1) = 1.
double random_graph_prediction(std::size_t n, double p, std::int64_t beta_km1);

struct CorpusEntry {
  std::string id;
  Graph graph;
  std::vector<std::size_t> k_values;
};

struct TightnessConfig {
  std::vector<BoundVariant> variants{BoundVariant::statement_vol_over_2,
                                     BoundVariant::proof_vol_over_2k};
  std::vector<CutMode> modes{CutMode::size_bounded};
  std::vector<L2kMode> l2k_modes{L2kMode::second_smallest};
  std::size_t max_dim = 3;
  bool compute_actual = true;
  SearchBudget budget;
  double kernel_tol = kDefaultKernelTol;
};

struct TightnessRow {
  std::string graph_id;
  std::size_t k = 0;
  BoundVariant variant{};
  CutMode mode{};
  L2kMode l2k_mode{};
  double term1 = 0.0;
  double term2 = 0.0;
  double bound = 0.0;
  std::optional<std::size_t> actual;  // cut size, possibly an upper bound
  bool proven_optimal = false;
  std::optional<double> ratio;        // actual / bound; absent if bound == 0
  std::optional<bool> violated;
};

struct TightnessReport {
  std::vector<TightnessRow> rows;
  std::size_t decided = 0;   // rows whose violation status is known
  std::size_t violations = 0;
  // violations / decided, or absent when nothing is decided.
  std::optional<double> violation_fraction() const;
};

// Rows are ordered by corpus position, then k, variant, mode, l2k mode.
TightnessReport tightness_report(const std::vector<CorpusEntry>& corpus,
                                 const TightnessConfig& config);

// Human-readable notes on inconsistencies in the published bound and on the
// convention each report column follows.
std::string discrepancy_ledger();

}  // namespace netres
