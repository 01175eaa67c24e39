#include "netres/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "netres/error.hpp"

namespace netres {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }
  std::size_t size_of(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

std::size_t choose2(std::size_t s) { return s * (s - (s > 0)) / 2; }

// Most edges a graph on s vertices can have when every component has at
// most cap vertices.
std::size_t max_edges_bounded(std::size_t s, std::size_t cap) {
  if (cap == 0) return 0;
  return (s / cap) * choose2(cap) + choose2(s % cap);
}

void validate_k(const Graph& g, std::size_t k, CutMode mode) {
  if (mode == CutMode::size_bounded && k < 2) {
    throw ValidationError("k must be >= 2 in size_bounded mode, got " +
                          std::to_string(k));
  }
  if (mode == CutMode::component_count) {
    if (k < 1) throw ValidationError("k must be >= 1 in component_count mode");
    if (k > g.num_vertices()) {
      throw ValidationError("component_count: k=" + std::to_string(k) +
                            " exceeds n=" + std::to_string(g.num_vertices()) +
                            " (at most n components)");
    }
  }
}

// Component structure of G minus the edges flagged in `removed`.
struct Components {
  std::vector<std::size_t> root;  // per vertex
  std::vector<std::size_t> size;  // per vertex; valid at roots
  std::vector<std::size_t> edges; // non-removed edges per root
  std::size_t count = 0;
  std::size_t largest = 0;
};

template <class Removed>
Components components_without(const Graph& g, Removed removed) {
  const auto n = g.num_vertices();
  DisjointSets ds(n);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!removed(i)) ds.unite(edges[i].u, edges[i].v);
  Components c;
  c.root.resize(n);
  c.size.assign(n, 0);
  c.edges.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    c.root[v] = ds.find(v);
    if (c.size[c.root[v]]++ == 0) ++c.count;
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!removed(i)) ++c.edges[c.root[edges[i].u]];
  for (std::size_t v = 0; v < n; ++v) c.largest = std::max(c.largest, c.size[v]);
  return c;
}

bool condition_holds(const Components& c, std::size_t k, CutMode mode) {
  return mode == CutMode::size_bounded ? c.largest < k : c.count >= k;
}

std::size_t lower_bound_size(const Components& c, std::size_t k) {
  std::size_t lb = 0;
  for (std::size_t v = 0; v < c.root.size(); ++v) {
    if (c.root[v] != v || c.size[v] < k) continue;
    const auto s = c.size[v];
    const auto parts = (s + k - 2) / (k - 1);
    const auto dense = c.edges[v] > max_edges_bounded(s, k - 1)
                           ? c.edges[v] - max_edges_bounded(s, k - 1)
                           : 0;
    lb += std::max(parts - 1, dense);
  }
  return lb;
}

// Minimum over splits t_i of the components (sum t_i >= k) of the per
// component cost max(t_i - 1, m_i - C(s_i - t_i + 1, 2)).
std::size_t lower_bound_count(const Components& c, std::size_t k) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::size_t> dp(k + 1, kInf), next;
  dp[0] = 0;
  for (std::size_t v = 0; v < c.root.size(); ++v) {
    if (c.root[v] != v) continue;
    const auto s = c.size[v], m = c.edges[v];
    next.assign(k + 1, kInf);
    for (std::size_t j = 0; j <= k; ++j) {
      if (dp[j] >= kInf) continue;
      for (std::size_t t = 1; t <= s; ++t) {
        const auto keep = choose2(s - t + 1);
        const auto cost = std::max(t - 1, m > keep ? m - keep : 0);
        auto& slot = next[std::min(k, j + t)];
        slot = std::min(slot, dp[j] + cost);
        if (j + t >= k) break;
      }
    }
    dp.swap(next);
  }
  return dp[k];
}

struct BudgetExhausted {};

class CutSearch {
 public:
  enum : std::uint8_t { kFree = 0, kRemoved = 1, kKept = 2 };

  CutSearch(const Graph& g, std::size_t k, CutMode mode,
            const SearchBudget& budget)
      : g_(g),
        k_(k),
        mode_(mode),
        budget_(budget),
        state_(g.num_edges(), kFree),
        start_(std::chrono::steady_clock::now()) {}

  // Decides whether a cut of size <= c exists; leaves the witness in state_.
  bool feasible(std::size_t c) { return dfs(c); }

  std::vector<Edge> witness() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < state_.size(); ++i)
      if (state_[i] == kRemoved) out.push_back(g_.edges()[i]);
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  void tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) throw BudgetExhausted{};
    if ((nodes_ & 0xff) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.max_time)
      throw BudgetExhausted{};
  }

  bool kept_violates() const {
    auto kept = components_without(
        g_, [&](std::size_t i) { return state_[i] != kKept; });
    return mode_ == CutMode::size_bounded ? kept.largest >= k_
                                          : kept.count < k_;
  }

  bool dfs(std::size_t remaining) {
    tick();
    auto comps = components_without(
        g_, [&](std::size_t i) { return state_[i] == kRemoved; });
    if (condition_holds(comps, k_, mode_)) return true;
    if (remaining == 0) return false;
    const auto lb = mode_ == CutMode::size_bounded
                        ? lower_bound_size(comps, k_)
                        : lower_bound_count(comps, k_);
    if (lb > remaining) return false;
    if (kept_violates()) return false;

    std::vector<std::size_t> branch;
    const auto edges = g_.edges();
    if (mode_ == CutMode::size_bounded) {
      // Offending components are disjoint, so the one holding the smallest
      // offending vertex is the lexicographically smallest.
      std::size_t target = comps.root.size();
      for (std::size_t v = 0; v < comps.root.size(); ++v) {
        if (comps.size[comps.root[v]] >= k_) {
          target = comps.root[v];
          break;
        }
      }
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (state_[i] == kFree && comps.root[edges[i].u] == target)
          branch.push_back(i);
    } else {
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (state_[i] == kFree) branch.push_back(i);
    }

    bool found = false;
    std::size_t done = 0;
    for (; done < branch.size(); ++done) {
      state_[branch[done]] = kRemoved;
      if (dfs(remaining - 1)) {
        found = true;
        break;
      }
      state_[branch[done]] = kKept;
    }
    if (found) {
      // Keep the removed edge; release the edges fixed as kept.
      for (std::size_t j = 0; j < done; ++j) state_[branch[j]] = kFree;
    } else {
      for (auto i : branch) state_[i] = kFree;
    }
    return found;
  }

  const Graph& g_;
  std::size_t k_;
  CutMode mode_;
  SearchBudget budget_;
  std::vector<std::uint8_t> state_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

std::vector<Edge> sorted(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

std::string to_string(CutMode mode) {
  return mode == CutMode::size_bounded ? "size_bounded" : "component_count";
}

bool satisfies(const Graph& g, std::span<const Edge> removed, std::size_t k,
               CutMode mode) {
  std::vector<char> gone(g.num_edges(), 0);
  for (const auto& e : removed) {
    auto idx = g.edge_index(e.u, e.v);
    if (!idx) {
      throw ValidationError("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "} is not in the graph");
    }
    gone[*idx] = 1;
  }
  auto comps = components_without(g, [&](std::size_t i) { return gone[i]; });
  return condition_holds(comps, k, mode);
}

CutResult greedy_cut(const Graph& g, std::size_t k, CutMode mode) {
  validate_k(g, k, mode);
  const auto m = g.num_edges();
  std::vector<char> gone(m, 0);
  auto comps_now = [&] {
    return components_without(g, [&](std::size_t i) { return gone[i]; });
  };
  std::vector<std::size_t> order;
  for (auto c = comps_now(); !condition_holds(c, k, mode); c = comps_now()) {
    std::size_t best = m;
    std::size_t best_largest = 0, best_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (gone[i]) continue;
      if (mode == CutMode::size_bounded &&
          c.size[c.root[g.edges()[i].u]] < k)
        continue;
      gone[i] = 1;
      auto after = comps_now();
      gone[i] = 0;
      bool better;
      if (best == m) {
        better = true;
      } else if (mode == CutMode::size_bounded) {
        better = after.largest < best_largest;
      } else {
        better = after.count > best_count ||
                 (after.count == best_count && after.largest < best_largest);
      }
      if (better) {
        best = i;
        best_largest = after.largest;
        best_count = after.count;
      }
    }
    gone[best] = 1;
    order.push_back(best);
  }
  // Put back edges the condition does not need, latest first.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    gone[*it] = 0;
    if (!condition_holds(comps_now(), k, mode)) gone[*it] = 1;
  }
  CutResult r;
  r.k = k;
  r.mode = mode;
  for (std::size_t i = 0; i < m; ++i)
    if (gone[i]) r.witness.push_back(g.edges()[i]);
  r.size = r.witness.size();
  r.proven_optimal = r.size == 0;
  return r;
}

CutResult lambda_s(const Graph& g, std::size_t k, CutMode mode,
                   const SearchBudget& budget) {
  validate_k(g, k, mode);
  CutSearch search(g, k, mode, budget);
  CutResult r;
  r.k = k;
  r.mode = mode;
  std::size_t c = 0;
  try {
    while (!search.feasible(c)) ++c;
    r.size = c;
    r.witness = sorted(search.witness());
    r.proven_optimal = true;
  } catch (const BudgetExhausted&) {
    auto greedy = greedy_cut(g, k, mode);
    r.size = greedy.size;
    r.witness = std::move(greedy.witness);
    // Every cut size below c has been refuted.
    r.proven_optimal = greedy.size == c;
  }
  r.stats.nodes = search.nodes();
  r.stats.elapsed_ms = search.elapsed_ms();
  r.stats.lower_bound = c;
  return r;
}

CutResult lambda_s_oracle(const Graph& g, std::size_t k, CutMode mode) {
  validate_k(g, k, mode);
  const auto m = g.num_edges();
  if (m > kOracleMaxEdges) {
    throw ResourceError("oracle enumeration limited to " +
                        std::to_string(kOracleMaxEdges) + " edges, graph has " +
                        std::to_string(m));
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<char> gone(m, 0);
  std::uint64_t checked = 0;
  for (std::size_t size = 0; size <= m; ++size) {
    // Index combinations of `size` edges in lexicographic order.
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::fill(gone.begin(), gone.end(), 0);
      for (auto i : pick) gone[i] = 1;
      ++checked;
      auto comps =
          components_without(g, [&](std::size_t i) { return gone[i]; });
      if (condition_holds(comps, k, mode)) {
        CutResult r;
        r.k = k;
        r.mode = mode;
        r.size = size;
        for (auto i : pick) r.witness.push_back(g.edges()[i]);
        r.proven_optimal = true;
        r.stats.nodes = checked;
        r.stats.lower_bound = size;
        r.stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        return r;
      }
      // Advance to the next combination.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  // Unreachable for validated k: removing every edge satisfies both modes.
  throw Error("oracle found no feasible cut");
}

std::size_t classical_edge_connectivity(const Graph& g) {
  const auto n = g.num_vertices();
  if (n < 2) {
    throw ValidationError("edge connectivity needs n >= 2, got n=" +
                          std::to_string(n));
  }
  if (connected_components(g).size() > 1) return 0;

  // Arc 2i and 2i+1 are the two directions of edge i, each other's reverse.
  const auto edges = g.edges();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<Vertex> head(2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    head[2 * i] = edges[i].v;
    head[2 * i + 1] = edges[i].u;
    out[edges[i].u].push_back(2 * i);
    out[edges[i].v].push_back(2 * i + 1);
  }

  std::size_t best = min_degree(g);
  std::vector<int> cap(head.size());
  std::vector<std::size_t> via(n);
  std::vector<char> seen(n);
  for (Vertex t = 1; t < n; ++t) {
    std::fill(cap.begin(), cap.end(), 1);
    std::size_t flow = 0;
    while (flow < best) {
      std::fill(seen.begin(), seen.end(), 0);
      std::queue<Vertex> q;
      q.push(0);
      seen[0] = 1;
      while (!q.empty() && !seen[t]) {
        Vertex v = q.front();
        q.pop();
        for (auto a : out[v]) {
          if (cap[a] > 0 && !seen[head[a]]) {
            seen[head[a]] = 1;
            via[head[a]] = a;
            q.push(head[a]);
          }
        }
      }
      if (!seen[t]) break;
      for (Vertex v = t; v != 0;) {
        const auto a = via[v];
        --cap[a];
        ++cap[a ^ 1];
        v = head[a ^ 1];
      }
      ++flow;
    }
    best = std::min(best, flow);
  }
  return best;
}

}  // namespace netres
