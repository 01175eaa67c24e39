#include "netres/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "netres/error.hpp"

namespace netres {
namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Stream {
 public:
  Stream(std::uint64_t seed, const std::string& family)
      : engine_(splitmix64(seed ^ fnv1a(family))) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0)) / 2);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, std::move(edges));
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph erdos_renyi(const family::ErdosRenyi& f, std::uint64_t seed) {
  Stream rng(seed, "erdos_renyi");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < f.n; ++i)
    for (Vertex j = i + 1; j < f.n; ++j)
      if (rng.uniform() < f.p) edges.push_back({i, j});
  return Graph(f.n, std::move(edges));
}

// Pairing model: stubs are matched uniformly at random; a pair that would
// create a self-loop or multi-edge is redrawn, and an attempt that gets stuck
// is discarded.
Graph random_regular(const family::RandomRegular& f, std::uint64_t seed) {
  Stream rng(seed, "random_regular");
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vertex> stubs;
    stubs.reserve(f.n * f.d);
    for (Vertex v = 0; v < f.n; ++v)
      for (std::size_t j = 0; j < f.d; ++j) stubs.push_back(v);
    std::set<Edge> edges;
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      bool placed = false;
      for (int tries = 0; tries < 100 && !placed; ++tries) {
        auto i = rng.below(stubs.size());
        auto j = rng.below(stubs.size());
        if (i == j) continue;
        Vertex a = stubs[i], b = stubs[j];
        if (a == b) continue;
        Edge e{std::min(a, b), std::max(a, b)};
        if (edges.contains(e)) continue;
        edges.insert(e);
        // Remove the larger index first so the smaller stays valid.
        for (auto idx : {std::max(i, j), std::min(i, j)}) {
          stubs[idx] = stubs.back();
          stubs.pop_back();
        }
        placed = true;
      }
      stuck = !placed;
    }
    if (!stuck) {
      return Graph(f.n, std::vector<Edge>(edges.begin(), edges.end()));
    }
  }
  throw ResourceError("random_regular(n=" + std::to_string(f.n) +
                      ", d=" + std::to_string(f.d) +
                      "): no simple pairing after 1000 attempts");
}

Graph watts_strogatz(const family::WattsStrogatz& f, std::uint64_t seed) {
  Stream rng(seed, "watts_strogatz");
  const auto n = f.n;
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= f.k / 2; ++j) {
      Vertex w = static_cast<Vertex>((i + j) % n);
      adj[i].insert(w);
      adj[w].insert(i);
    }
  }
  for (std::size_t j = 1; j <= f.k / 2; ++j) {
    for (Vertex i = 0; i < n; ++i) {
      Vertex w = static_cast<Vertex>((i + j) % n);
      if (rng.uniform() >= f.beta) continue;
      if (!adj[i].contains(w)) continue;  // already rewired away
      if (adj[i].size() + 1 >= n) continue;  // no free target
      Vertex target;
      do {
        target = static_cast<Vertex>(rng.below(n));
      } while (target == i || adj[i].contains(target));
      adj[i].erase(w);
      adj[w].erase(i);
      adj[i].insert(target);
      adj[target].insert(i);
    }
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex w : adj[i])
      if (i < w) edges.push_back({i, w});
  return Graph(n, std::move(edges));
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string family_name(const GraphFamily& f) {
  return std::visit(
      overloaded{
          [](const family::Complete&) { return std::string("complete"); },
          [](const family::Cycle&) { return std::string("cycle"); },
          [](const family::Path&) { return std::string("path"); },
          [](const family::Edgeless&) { return std::string("edgeless"); },
          [](const family::ErdosRenyi&) { return std::string("er"); },
          [](const family::RandomRegular&) { return std::string("rr"); },
          [](const family::WattsStrogatz&) { return std::string("ws"); },
      },
      f);
}

std::size_t family_size(const GraphFamily& f) {
  return std::visit([](const auto& x) { return x.n; }, f);
}

void validate(const GraphSpec& spec) {
  std::visit(
      overloaded{
          [](const family::Cycle& c) {
            if (c.n < 3) throw ValidationError("cycle: n must be >= 3");
          },
          [](const family::ErdosRenyi& e) {
            if (!(e.p >= 0.0 && e.p <= 1.0))
              throw ValidationError("er: p must lie in [0,1]");
          },
          [](const family::RandomRegular& r) {
            if (r.d >= r.n && !(r.n == 0 && r.d == 0))
              throw ValidationError("rr: d must be < n");
            if ((r.n * r.d) % 2 != 0)
              throw ValidationError("rr: n*d must be even");
          },
          [](const family::WattsStrogatz& w) {
            if (w.k % 2 != 0) throw ValidationError("ws: k must be even");
            if (w.k >= w.n) throw ValidationError("ws: k must be < n");
            if (!(w.beta >= 0.0 && w.beta <= 1.0))
              throw ValidationError("ws: beta must lie in [0,1]");
          },
          [](const auto&) {},
      },
      spec.family);
}

bool is_random(const GraphSpec& spec) {
  return std::holds_alternative<family::ErdosRenyi>(spec.family) ||
         std::holds_alternative<family::RandomRegular>(spec.family) ||
         std::holds_alternative<family::WattsStrogatz>(spec.family);
}

Graph generate(const GraphSpec& spec) {
  validate(spec);
  return std::visit(
      overloaded{
          [](const family::Complete& f) { return complete(f.n); },
          [](const family::Cycle& f) { return cycle(f.n); },
          [](const family::Path& f) { return path(f.n); },
          [](const family::Edgeless& f) { return Graph(f.n); },
          [&](const family::ErdosRenyi& f) {
            return erdos_renyi(f, spec.seed);
          },
          [&](const family::RandomRegular& f) {
            return random_regular(f, spec.seed);
          },
          [&](const family::WattsStrogatz& f) {
            return watts_strogatz(f, spec.seed);
          },
      },
      spec.family);
}

GraphSpec parse_graph_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size() && !rest.empty()) {
      auto comma = rest.find(',', pos);
      auto item = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ValidationError("graph spec '" + text + "': expected key=value, got '" +
                              item + "'");
      }
      if (!params.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
        throw ValidationError("graph spec '" + text + "': repeated key '" +
                              item.substr(0, eq) + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }

  auto take = [&](const std::string& key) -> std::string {
    auto it = params.find(key);
    if (it == params.end()) {
      throw ValidationError("graph spec '" + text + "': missing parameter '" +
                            key + "'");
    }
    auto v = it->second;
    params.erase(it);
    return v;
  };
  auto as_size = [&](const std::string& key) -> std::size_t {
    auto v = take(key);
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
      throw ValidationError("graph spec: parameter '" + key +
                            "' is not a nonnegative integer: '" + v + "'");
    return out;
  };
  auto as_real = [&](const std::string& key) -> double {
    auto v = take(key);
    double out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
      throw ValidationError("graph spec: parameter '" + key +
                            "' is not a real number: '" + v + "'");
    return out;
  };

  GraphSpec spec;
  bool random = false;
  if (name == "complete") {
    spec.family = family::Complete{as_size("n")};
  } else if (name == "cycle") {
    spec.family = family::Cycle{as_size("n")};
  } else if (name == "path") {
    spec.family = family::Path{as_size("n")};
  } else if (name == "edgeless") {
    spec.family = family::Edgeless{as_size("n")};
  } else if (name == "er" || name == "erdos_renyi") {
    spec.family = family::ErdosRenyi{as_size("n"), as_real("p")};
    random = true;
  } else if (name == "rr" || name == "random_regular") {
    spec.family = family::RandomRegular{as_size("n"), as_size("d")};
    random = true;
  } else if (name == "ws" || name == "watts_strogatz") {
    auto n = as_size("n");
    auto k = as_size("k");
    spec.family = family::WattsStrogatz{n, k, as_real("beta")};
    random = true;
  } else {
    throw ValidationError("graph spec '" + text + "': unknown family '" +
                          name + "'");
  }
  if (random && params.contains("seed")) spec.seed = as_size("seed");
  if (!params.empty()) {
    throw ValidationError("graph spec '" + text + "': unknown parameter '" +
                          params.begin()->first + "' for family '" + name +
                          "'");
  }
  validate(spec);
  return spec;
}

std::string to_string(const GraphSpec& spec) {
  std::string out = std::visit(
      overloaded{
          [](const family::Complete& f) {
            return "complete:n=" + std::to_string(f.n);
          },
          [](const family::Cycle& f) {
            return "cycle:n=" + std::to_string(f.n);
          },
          [](const family::Path& f) { return "path:n=" + std::to_string(f.n); },
          [](const family::Edgeless& f) {
            return "edgeless:n=" + std::to_string(f.n);
          },
          [](const family::ErdosRenyi& f) {
            return "er:n=" + std::to_string(f.n) + ",p=" + format_double(f.p);
          },
          [](const family::RandomRegular& f) {
            return "rr:n=" + std::to_string(f.n) + ",d=" + std::to_string(f.d);
          },
          [](const family::WattsStrogatz& f) {
            return "ws:n=" + std::to_string(f.n) + ",k=" + std::to_string(f.k) +
                   ",beta=" + format_double(f.beta);
          },
      },
      spec.family);
  if (is_random(spec)) out += ",seed=" + std::to_string(spec.seed);
  return out;
}

}  // namespace netres
