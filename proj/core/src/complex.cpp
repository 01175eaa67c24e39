#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "netres/error.hpp"
#include "netres/topology.hpp"

namespace netres {

std::size_t SimplicialComplex::count(std::size_t k) const noexcept {
  if (k >= flat_.size()) return 0;
  return flat_[k].size() / (k + 1);
}

std::vector<std::size_t> SimplicialComplex::counts() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= max_dim_; ++k) out.push_back(count(k));
  return out;
}

void SimplicialComplex::push_dimension(std::vector<Vertex> flat) {
  if (!flat_.empty()) ++max_dim_;
  flat_.push_back(std::move(flat));
}

std::optional<std::size_t> SimplicialComplex::index_of(
    std::span<const Vertex> s) const {
  if (s.empty()) return std::nullopt;
  const std::size_t k = s.size() - 1;
  const auto n = count(k);
  std::size_t lo = 0, hi = n;
  while (lo < hi) {
    const auto mid = lo + (hi - lo) / 2;
    auto cand = simplex(k, mid);
    if (std::lexicographical_compare(cand.begin(), cand.end(), s.begin(),
                                     s.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < n && std::ranges::equal(simplex(k, lo), s)) return lo;
  return std::nullopt;
}

Graph SimplicialComplex::one_skeleton() const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < count(1); ++i) {
    auto s = simplex(1, i);
    edges.push_back({s[0], s[1]});
  }
  return Graph(num_vertices(), std::move(edges));
}

SimplicialComplex SimplicialComplex::from_facets(
    std::size_t num_vertices, const std::vector<std::vector<Vertex>>& facets,
    std::size_t max_dim) {
  std::vector<std::set<std::vector<Vertex>>> faces(max_dim + 1);
  for (const auto& raw : facets) {
    auto f = raw;
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw ValidationError("facet repeats a vertex");
    }
    for (auto v : f) {
      if (v >= num_vertices) {
        throw ValidationError("facet vertex " + std::to_string(v) +
                              " out of range");
      }
    }
    if (f.empty()) continue;
    // All nonempty subsets with at most max_dim+1 vertices.
    const std::size_t m = f.size();
    if (m > 24) throw ResourceError("facet with more than 24 vertices");
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size > max_dim + 1) continue;
      std::vector<Vertex> sub;
      sub.reserve(size);
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) sub.push_back(f[i]);
      faces[size - 1].insert(std::move(sub));
    }
  }
  SimplicialComplex c;
  std::vector<Vertex> verts(num_vertices);
  for (Vertex v = 0; v < num_vertices; ++v) verts[v] = v;
  c.push_dimension(std::move(verts));
  for (std::size_t k = 1; k <= max_dim; ++k) {
    if (faces[k].size() > kMaxSimplicesPerDim) {
      throw ResourceError("more than " + std::to_string(kMaxSimplicesPerDim) +
                          " simplices in dimension " + std::to_string(k));
    }
    std::vector<Vertex> flat;
    flat.reserve(faces[k].size() * (k + 1));
    for (const auto& s : faces[k]) flat.insert(flat.end(), s.begin(), s.end());
    c.push_dimension(std::move(flat));
  }
  return c;
}

namespace {

struct CliqueLister {
  const Graph& g;
  std::size_t max_size;
  std::size_t cap;
  std::vector<std::vector<Vertex>>& out;  // out[k] flat list
  std::vector<Vertex> clique;

  void extend(const std::vector<Vertex>& candidates) {
    const std::size_t k = clique.size() - 1;
    if (out[k].size() / (k + 1) >= cap) {
      throw ResourceError("clique complex: more than " + std::to_string(cap) +
                          " simplices in dimension " + std::to_string(k));
    }
    out[k].insert(out[k].end(), clique.begin(), clique.end());
    if (clique.size() == max_size) return;
    std::vector<Vertex> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Vertex w = candidates[i];
      next.clear();
      // Candidates after w that are adjacent to w; both lists are sorted.
      auto nb = g.neighbors(w);
      std::set_intersection(candidates.begin() + i + 1, candidates.end(),
                            nb.begin(), nb.end(), std::back_inserter(next));
      clique.push_back(w);
      extend(next);
      clique.pop_back();
    }
  }
};

}  // namespace

SimplicialComplex clique_complex(const Graph& g, std::size_t max_dim,
                                 std::size_t cap) {
  std::vector<std::vector<Vertex>> flat(max_dim + 1);
  CliqueLister lister{g, max_dim + 1, cap, flat, {}};
  std::vector<Vertex> higher;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    higher.clear();
    for (Vertex w : g.neighbors(v))
      if (w > v) higher.push_back(w);
    lister.clique = {v};
    lister.extend(higher);
  }
  SimplicialComplex c;
  for (auto& f : flat) c.push_dimension(std::move(f));
  return c;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<Vertex>& r,
                   std::vector<Vertex> p, std::vector<Vertex> x,
                   std::vector<std::vector<Vertex>>& out) {
  if (p.empty() && x.empty()) {
    auto c = r;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  // Pivot: vertex of P u X with the most neighbours in P.
  Vertex pivot = 0;
  std::size_t best = 0;
  bool have = false;
  for (const auto* set : {&p, &x}) {
    for (Vertex u : *set) {
      auto nb = g.neighbors(u);
      std::size_t cnt = 0;
      for (Vertex w : p)
        if (std::binary_search(nb.begin(), nb.end(), w)) ++cnt;
      if (!have || cnt > best) {
        pivot = u;
        best = cnt;
        have = true;
      }
    }
  }
  auto pivot_nb = g.neighbors(pivot);
  std::vector<Vertex> branch;
  for (Vertex v : p)
    if (!std::binary_search(pivot_nb.begin(), pivot_nb.end(), v))
      branch.push_back(v);
  for (Vertex v : branch) {
    auto nb = g.neighbors(v);
    std::vector<Vertex> p2, x2;
    std::set_intersection(p.begin(), p.end(), nb.begin(), nb.end(),
                          std::back_inserter(p2));
    std::set_intersection(x.begin(), x.end(), nb.begin(), nb.end(),
                          std::back_inserter(x2));
    r.push_back(v);
    bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> r;
  std::vector<Vertex> p(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) p[v] = v;
  bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

FacetComplex load_facet_list(std::istream& in,
                             std::optional<std::size_t> max_dim) {
  std::unordered_map<std::string, Vertex> index;
  FacetComplex result;
  std::vector<std::vector<Vertex>> facets;
  std::size_t top = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<Vertex> facet;
    for (std::string tok; ls >> tok;) {
      auto [it, inserted] = index.try_emplace(
          tok, static_cast<Vertex>(result.labels.size()));
      if (inserted) result.labels.push_back(tok);
      facet.push_back(it->second);
    }
    auto sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(lineno, "facet repeats a vertex");
    }
    top = std::max(top, facet.size() - 1);
    facets.push_back(std::move(facet));
  }
  result.complex = SimplicialComplex::from_facets(
      result.labels.size(), facets, max_dim.value_or(top));
  return result;
}

FacetComplex load_facet_list_file(const std::string& path,
                                  std::optional<std::size_t> max_dim) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return load_facet_list(in, max_dim);
  } catch (const ParseError& e) {
    throw ParseError(path, e.line(), e.detail());
  }
}

}  // namespace netres
