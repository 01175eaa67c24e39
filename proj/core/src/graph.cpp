#include "netres/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "netres/error.hpp"

namespace netres {

Graph::Graph(std::size_t n) : n_(n), adjacency_(n) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : n_(n), adjacency_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_) {
    throw ValidationError("label count " + std::to_string(labels_.size()) +
                          " does not match vertex count " + std::to_string(n_));
  }
  for (auto& e : edges) {
    if (e.u >= n_ || e.v >= n_) {
      throw ValidationError("edge endpoint out of range: {" +
                            std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} with n=" + std::to_string(n_));
    }
    if (e.u == e.v) {
      throw ValidationError("self-loop on vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw ValidationError("duplicate edge {" + std::to_string(dup->u) + "," +
                          std::to_string(dup->v) + "}");
  }
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  if (a >= n_ || b >= n_) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a,
                                             Vertex b) const noexcept {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_.at(v);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) {
    throw ValidationError("permutation size does not match vertex count");
  }
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({perm[e.u], perm[e.v]});
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    labels.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) labels[perm[v]] = labels_[v];
  }
  return Graph(n_, std::move(out), std::move(labels));
}

Graph load_edge_list(std::istream& in) {
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;

  auto intern = [&](const std::string& tok) {
    auto [it, inserted] =
        index.try_emplace(tok, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(tok);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.size() != 2) {
      throw ParseError(lineno, "expected 2 vertex tokens, found " +
                                   std::to_string(tokens.size()));
    }
    if (tokens[0] == tokens[1]) {
      throw ValidationError("line " + std::to_string(lineno) +
                            ": self-loop on vertex '" + tokens[0] + "'");
    }
    Vertex a = intern(tokens[0]);
    Vertex b = intern(tokens[1]);
    edges.push_back({std::min(a, b), std::max(a, b)});
    edge_line.push_back(lineno);
  }

  // Report duplicates with the line of the repeated occurrence.
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
    return edges[x] < edges[y];
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      const auto& e = edges[order[i]];
      throw ValidationError("line " + std::to_string(edge_line[order[i]]) +
                            ": duplicate edge {" + labels[e.u] + "," +
                            labels[e.v] + "}");
    }
  }
  const auto n = labels.size();
  return Graph(n, std::move(edges), std::move(labels));
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return load_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(path, e.line(), e.detail());
  }
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const auto n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::uint64_t volume(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) total += g.degree(v);
  return total;
}

std::size_t min_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (v == 0 || g.degree(v) < best) best = g.degree(v);
  }
  return best;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto offset = static_cast<Vertex>(a.num_vertices());
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const auto& e : b.edges()) edges.push_back({e.u + offset, e.v + offset});
  return Graph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

}  // namespace netres
