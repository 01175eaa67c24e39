#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netres {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..n-1. Immutable after construction.
//
// Edges are stored as (min, max) pairs in lexicographic order; self-loops and
// duplicate edges are rejected with ValidationError.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return adjacency_[v];
  }
  std::size_t degree(Vertex v) const noexcept { return adjacency_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const noexcept;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const noexcept;

  // Original labels, indexed by vertex; empty when the graph was not loaded
  // from a labelled source.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Vertex v) const;

  // Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;  // sorted ascending
  std::vector<std::string> labels_;
};

// Parses the whitespace-separated edge-list format. Lines whose first
// non-blank character is '#' and blank lines are skipped. Labels are mapped
// to dense indices in order of first appearance.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
Graph parse_edge_list(const std::string& text);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Sum of degrees, i.e. 2|E|.
std::uint64_t volume(const Graph& g);

std::size_t min_degree(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace netres
