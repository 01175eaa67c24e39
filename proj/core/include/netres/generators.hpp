#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "netres/graph.hpp"

namespace netres {

namespace family {
struct Complete { std::size_t n; };
struct Cycle { std::size_t n; };
struct Path { std::size_t n; };
struct Edgeless { std::size_t n; };
struct ErdosRenyi { std::size_t n; double p; };
struct RandomRegular { std::size_t n; std::size_t d; };
struct WattsStrogatz { std::size_t n; std::size_t k; double beta; };
}  // namespace family

using GraphFamily =
    std::variant<family::Complete, family::Cycle, family::Path,
                 family::Edgeless, family::ErdosRenyi, family::RandomRegular,
                 family::WattsStrogatz>;

struct GraphSpec {
  GraphFamily family;
  std::uint64_t seed = 0;
};

// Throws ValidationError naming the offending parameter.
void validate(const GraphSpec& spec);

bool is_random(const GraphSpec& spec);

// Deterministic: identical spec and seed give an identical Graph.
//
// Random families draw from std::mt19937_64 seeded with
// splitmix64(seed ^ fnv1a(family name)), so each family owns its own stream.
// Uniform reals are (x >> 11) * 2^-53 and bounded integers use rejection
// sampling, so output does not depend on the standard library's
// distribution implementations.
Graph generate(const GraphSpec& spec);

// "er:n=100,p=0.05,seed=7", "complete:n=4", "ws:n=50,k=4,beta=0.1,seed=3",
// "rr:n=10,d=3,seed=1", "cycle:n=5", "path:n=4", "edgeless:n=7".
// Long family names (erdos_renyi, random_regular, watts_strogatz) are also
// accepted.
GraphSpec parse_graph_spec(const std::string& text);
std::string to_string(const GraphSpec& spec);

std::string family_name(const GraphFamily& f);
std::size_t family_size(const GraphFamily& f);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace netres
