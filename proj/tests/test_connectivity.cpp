#include <algorithm>
#include <map>

#include "doctest.h"
#include "netres/connectivity.hpp"
#include "netres/error.hpp"
#include "netres/generators.hpp"
#include "oracles.hpp"

using namespace netres;

namespace {

Graph complete(std::size_t n) { return generate({family::Complete{n}}); }
Graph cycle(std::size_t n) { return generate({family::Cycle{n}}); }
Graph path(std::size_t n) { return generate({family::Path{n}}); }

// Independent check of the mode condition through union-find.
bool condition_holds(const Graph& g, const std::vector<Edge>& removed,
                     std::size_t k, CutMode mode) {
  std::vector<Edge> rest;
  for (const auto& e : g.edges())
    if (!std::binary_search(removed.begin(), removed.end(), e)) rest.push_back(e);
  auto labels = oracle::component_labels(g.num_vertices(), rest);
  std::map<std::size_t, std::size_t> sizes;
  for (auto l : labels) ++sizes[l];
  if (mode == CutMode::component_count) return sizes.size() >= k;
  return std::all_of(sizes.begin(), sizes.end(),
                     [&](const auto& kv) { return kv.second < k; });
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= 6; ++n) out.push_back(complete(n));
  for (std::size_t n = 3; n <= 8; ++n) out.push_back(cycle(n));
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(path(n));
  out.push_back(oracle::octahedron());
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = generate({family::ErdosRenyi{5 + seed % 4, 0.3 + 0.1 * (seed % 5)}, seed});
    if (g.num_edges() <= 20) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("lambda_s examples") {
  CHECK(lambda_s(complete(3), 2, CutMode::size_bounded).size == 3);
  CHECK(lambda_s(complete(3), 3, CutMode::size_bounded).size == 2);
  CHECK(lambda_s(cycle(4), 3, CutMode::size_bounded).size == 2);
  CHECK(lambda_s(cycle(4), 5, CutMode::size_bounded).size == 0);
  CHECK(lambda_s(complete(3), 2, CutMode::component_count).size == 2);
  CHECK(lambda_s(complete(3), 1, CutMode::component_count).size == 0);
  CHECK(lambda_s(path(3), 2, CutMode::component_count).size == 1);
  CHECK(lambda_s(complete(4), 4, CutMode::component_count).size == 6);

  auto r = lambda_s(cycle(4), 3, CutMode::size_bounded);
  CHECK(r.proven_optimal);
  CHECK(r.stats.lower_bound == r.size);
  CHECK(r.witness.size() == r.size);
}

TEST_CASE("lambda_s_oracle examples") {
  auto edgeless = generate({family::Edgeless{4}});
  CHECK(lambda_s_oracle(edgeless, 2, CutMode::size_bounded).size == 0);
  CHECK(lambda_s_oracle(edgeless, 4, CutMode::component_count).size == 0);
  CHECK(lambda_s_oracle(path(3), 2, CutMode::component_count).size == 1);
  CHECK(lambda_s_oracle(complete(3), 2, CutMode::size_bounded).size == 3);
  CHECK_THROWS_AS(lambda_s_oracle(complete(8), 3, CutMode::size_bounded),
                  ResourceError);
}

TEST_CASE("classical edge connectivity examples") {
  CHECK(classical_edge_connectivity(complete(4)) == 3);
  CHECK(classical_edge_connectivity(cycle(6)) == 2);
  CHECK(classical_edge_connectivity(path(4)) == 1);
  CHECK(classical_edge_connectivity(generate({family::Edgeless{3}})) == 0);
  CHECK_THROWS_AS(classical_edge_connectivity(Graph(1)), ValidationError);
}

TEST_CASE("branch-and-bound matches the exhaustive oracle") {
  for (const auto& g : small_graphs()) {
    const auto n = g.num_vertices();
    for (auto mode : {CutMode::size_bounded, CutMode::component_count}) {
      for (std::size_t k = mode == CutMode::size_bounded ? 2 : 1; k <= n; ++k) {
        auto fast = lambda_s(g, k, mode);
        auto slow = lambda_s_oracle(g, k, mode);
        CHECK(fast.proven_optimal);
        CHECK(slow.proven_optimal);
        CHECK(fast.size == slow.size);
        CHECK(condition_holds(g, fast.witness, k, mode));
        CHECK(condition_holds(g, slow.witness, k, mode));
        CHECK(satisfies(g, fast.witness, k, mode));
      }
    }
  }
}

TEST_CASE("witnesses are sorted edges of the graph and minimal in size") {
  for (const auto& g : small_graphs()) {
    for (std::size_t k = 2; k <= g.num_vertices(); ++k) {
      auto r = lambda_s(g, k, CutMode::size_bounded);
      CHECK(std::is_sorted(r.witness.begin(), r.witness.end()));
      for (const auto& e : r.witness) CHECK(g.has_edge(e.u, e.v));
      CHECK(r.witness.size() == r.size);
    }
  }
}

TEST_CASE("monotonicity in k") {
  for (const auto& g : small_graphs()) {
    const auto n = g.num_vertices();
    std::size_t prev = g.num_edges() + 1;
    for (std::size_t k = 2; k <= n + 1; ++k) {
      auto s = lambda_s(g, k, CutMode::size_bounded).size;
      CHECK(s <= prev);  // larger components allowed, fewer edges needed
      prev = s;
    }
    prev = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      auto s = lambda_s(g, k, CutMode::component_count).size;
      CHECK(s >= prev);
      prev = s;
    }
  }
}

TEST_CASE("size-bounded k=2 removes every edge") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = generate({family::ErdosRenyi{14, 0.3}, seed});
    CHECK(lambda_s(g, 2, CutMode::size_bounded).size == g.num_edges());
  }
}

TEST_CASE("component_count k=2 equals max-flow and brute-force min cut") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 30; ++seed) {
    const std::size_t n = 6 + seed % 10;
    auto g = generate({family::ErdosRenyi{n, 0.35}, seed});
    if (connected_components(g).size() != 1) continue;
    ++checked;
    const auto flow = classical_edge_connectivity(g);
    CHECK(flow == oracle::brute_force_min_cut(g));
    CHECK(lambda_s(g, 2, CutMode::component_count).size == flow);
    CHECK(flow <= min_degree(g));
  }
}

TEST_CASE("classical edge connectivity of disconnected graphs is zero") {
  auto g = disjoint_union(complete(4), cycle(5));
  CHECK(classical_edge_connectivity(g) == 0);
  CHECK(lambda_s(g, 2, CutMode::component_count).size == 0);
}

TEST_CASE("greedy cut is feasible and an upper bound") {
  for (const auto& g : small_graphs()) {
    for (auto mode : {CutMode::size_bounded, CutMode::component_count}) {
      for (std::size_t k = 2; k <= g.num_vertices(); ++k) {
        auto gr = greedy_cut(g, k, mode);
        CHECK(condition_holds(g, gr.witness, k, mode));
        CHECK(gr.size >= lambda_s(g, k, mode).size);
      }
    }
  }
}

TEST_CASE("budget exhaustion returns an unproven greedy bound") {
  auto g = generate({family::ErdosRenyi{30, 0.3}, 3});
  SearchBudget tiny{50, std::chrono::milliseconds(60'000)};
  auto r = lambda_s(g, 10, CutMode::size_bounded, tiny);
  CHECK_FALSE(r.proven_optimal);
  CHECK(r.stats.lower_bound <= r.size);
  CHECK(condition_holds(g, r.witness, 10, CutMode::size_bounded));
}

TEST_CASE("lambda_s is deterministic") {
  auto g = generate({family::ErdosRenyi{12, 0.4}, 9});
  auto a = lambda_s(g, 4, CutMode::size_bounded);
  auto b = lambda_s(g, 4, CutMode::size_bounded);
  CHECK(a.size == b.size);
  CHECK(a.witness == b.witness);
  CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("validation errors") {
  auto g = complete(4);
  CHECK_THROWS_AS(lambda_s(g, 1, CutMode::size_bounded), ValidationError);
  CHECK_THROWS_AS(lambda_s(g, 0, CutMode::component_count), ValidationError);
  CHECK_THROWS_AS(lambda_s(g, 5, CutMode::component_count), ValidationError);
  std::vector<Edge> foreign{{0, 9}};
  CHECK_THROWS_AS(satisfies(g, foreign, 2, CutMode::size_bounded), ValidationError);
}
