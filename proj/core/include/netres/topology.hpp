#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netres/graph.hpp"
#include "netres/spectral.hpp"

namespace netres {

// Hard cap on the number of simplices stored per dimension.
inline constexpr std::size_t kMaxSimplicesPerDim = 2'000'000;

// Finite abstract simplicial complex on vertices 0..n-1, truncated at
// max_dim. Simplices are strictly increasing vertex tuples; each dimension's
// list is sorted lexicographically, which fixes both indexing and orientation.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Downward closure of `facets`, truncated at max_dim. Every vertex in
  // 0..num_vertices-1 is a 0-simplex. Throws ValidationError for repeated
  // or out-of-range vertices inside a facet.
  static SimplicialComplex from_facets(
      std::size_t num_vertices,
      const std::vector<std::vector<Vertex>>& facets, std::size_t max_dim);

  std::size_t max_dim() const noexcept { return max_dim_; }
  std::size_t num_vertices() const noexcept { return count(0); }
  // n_k; zero for k > max_dim.
  std::size_t count(std::size_t k) const noexcept;
  std::vector<std::size_t> counts() const;

  std::span<const Vertex> simplex(std::size_t k, std::size_t i) const noexcept {
    return {flat_[k].data() + i * (k + 1), k + 1};
  }
  std::optional<std::size_t> index_of(std::span<const Vertex> s) const;

  // Vertices and 1-simplices as a Graph.
  Graph one_skeleton() const;

  // Appends a complete dimension; rows must already be sorted.
  // Used by the builders below.
  void push_dimension(std::vector<Vertex> flat);

 private:
  std::size_t max_dim_ = 0;
  std::vector<std::vector<Vertex>> flat_;  // flat_[k]: count(k) * (k+1)
};

// Clique (flag) complex: k-simplices are the (k+1)-cliques of g for
// k <= max_dim. Throws ResourceError if any dimension would exceed `cap`.
SimplicialComplex clique_complex(const Graph& g, std::size_t max_dim,
                                 std::size_t cap = kMaxSimplicesPerDim);

// Maximal cliques via Bron-Kerbosch with Tomita pivoting. Each clique is
// sorted; the list is sorted lexicographically.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

struct FacetComplex {
  SimplicialComplex complex;
  std::vector<std::string> labels;
};

// One facet per line, space-separated vertex labels; '#' comments and blank
// lines skipped. When max_dim is not given the complex keeps its full
// dimension.
FacetComplex load_facet_list(std::istream& in,
                             std::optional<std::size_t> max_dim = {});
FacetComplex load_facet_list_file(const std::string& path,
                                  std::optional<std::size_t> max_dim = {});

// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  IntMatrix(std::size_t r, std::size_t c, std::vector<std::int64_t> d);

  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return data[i * cols + j];
  }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }
  bool is_zero() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);

// Oriented boundary map from k-chains to (k-1)-chains, stored by column.
// Column j (simplex [v_0 < ... < v_k]) holds (-1)^i in the row of the face
// that omits v_i.
struct BoundaryMatrix {
  struct Entry {
    std::uint32_t row;
    std::int8_t sign;
  };
  std::size_t k = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> columns;

  IntMatrix to_dense() const;
};

// Throws ValidationError unless 1 <= k <= c.max_dim().
BoundaryMatrix boundary_matrix(const SimplicialComplex& c, std::size_t k);

// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
// 64-bit integers and reruns with arbitrary precision if an intermediate
// would overflow. No floating point.
std::size_t matrix_rank_exact(const IntMatrix& m);

// Rank of m mod 2. Never exceeds matrix_rank_exact(m); the two differ only
// when the integer matrix has 2-torsion.
std::size_t matrix_rank_gf2(const IntMatrix& m);

enum class RankField { rational, gf2 };

struct BettiProfile {
  std::vector<std::int64_t> betti;   // beta_0 .. beta_K
  std::vector<std::size_t> ranks;    // rank(d_k), ranks[0] == 0
  std::vector<std::size_t> counts;   // n_k

  std::int64_t euler_from_counts() const;
  std::int64_t euler_from_betti() const;
  // 0 for k > K.
  std::int64_t at(std::size_t k) const noexcept {
    return k < betti.size() ? betti[k] : 0;
  }
};

BettiProfile betti_numbers(const SimplicialComplex& c,
                           RankField field = RankField::rational);

// L_k = d_{k+1} d_{k+1}^T + d_k^T d_k on k-chains (dimension n_k). Entries
// are accumulated in integers before conversion. d_0 and d_{K+1} are zero.
// Throws ValidationError unless k <= c.max_dim().
SymmetricMatrix hodge_laplacian(const SimplicialComplex& c, std::size_t k);

enum class L2kMode { second_smallest, smallest_nonzero };

std::string to_string(L2kMode mode);

// lambda_2^(k). second_smallest: sorted index 1 (0 when the kernel has
// dimension >= 2). smallest_nonzero: least eigenvalue >= kernel_tol, or 0.
// Defined as 0 when n_k <= 1.
double lambda2_k(const SimplicialComplex& c, std::size_t k, L2kMode mode,
                 double kernel_tol = kDefaultKernelTol);

// Spectrum of L_k; empty when n_k == 0.
Spectrum hodge_spectrum(const SimplicialComplex& c, std::size_t k,
                        double kernel_tol = kDefaultKernelTol);

double lambda2_from_spectrum(const Spectrum& s, L2kMode mode);

}  // namespace netres
