#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netres/graph.hpp"

namespace netres {

// size_bounded: every component of G - F has fewer than k vertices.
// component_count: G - F has at least k connected components.
enum class CutMode { size_bounded, component_count };

std::string to_string(CutMode mode);

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::milliseconds max_time{60'000};
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
  // Largest cut size proven infeasible plus one; equals `size` when the
  // result is optimal.
  std::size_t lower_bound = 0;
};

struct CutResult {
  std::size_t k = 0;
  CutMode mode = CutMode::size_bounded;
  std::size_t size = 0;
  std::vector<Edge> witness;  // sorted
  bool proven_optimal = false;
  SearchStats stats;
};

// Whether G minus `removed` meets the mode's condition for k.
bool satisfies(const Graph& g, std::span<const Edge> removed, std::size_t k,
               CutMode mode);

// Exact k-component edge connectivity.
//
// Iterative deepening on the cut size c = 0, 1, 2, ...; each c is decided by
// a depth-first branch-and-bound over edge subsets. A node branches on the
// free edges (lexicographic order) of the lexicographically smallest
// offending component in size_bounded mode, or on all free edges in
// component_count mode; branch i removes edge i and fixes edges 0..i-1 as
// kept. Nodes are pruned when the kept edges alone violate the condition or
// when a counting lower bound exceeds the remaining budget.
//
// When the budget runs out the result is a greedy upper bound with
// proven_optimal == false. Throws ValidationError for k < 2 (size_bounded),
// k < 1 or k > n (component_count).
CutResult lambda_s(const Graph& g, std::size_t k, CutMode mode,
                   const SearchBudget& budget = {});

inline constexpr std::size_t kOracleMaxEdges = 25;

// Exhaustive enumeration of edge subsets by increasing size; the first
// feasible subset (lexicographic within a size) is returned. Throws
// ResourceError when |E| > kOracleMaxEdges.
CutResult lambda_s_oracle(const Graph& g, std::size_t k, CutMode mode);

// Repeatedly remove the edge that best improves the condition (ties broken
// lexicographically), then drop witness edges that are not needed.
CutResult greedy_cut(const Graph& g, std::size_t k, CutMode mode);

// Minimum number of edges whose removal disconnects g, via unit-capacity
// max-flow from vertex 0 to every other vertex. 0 for disconnected graphs;
// throws ValidationError when n < 2.
std::size_t classical_edge_connectivity(const Graph& g);

}  // namespace netres
