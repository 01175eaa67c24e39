#pragma once

#include <cstddef>
#include <vector>

#include "netres/graph.hpp"

namespace netres {

// Threshold below which an eigenvalue is treated as zero. Every kernel
// decision in the library goes through this value unless a caller overrides
// it explicitly.
inline constexpr double kDefaultKernelTol = 1e-8;

// Dense real symmetric matrix, row-major.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dim);
  // Throws ValidationError unless entries is dim*dim and exactly symmetric.
  SymmetricMatrix(std::size_t dim, std::vector<double> entries);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * dim_ + j];
  }
  // Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double value) noexcept;
  void add(std::size_t i, std::size_t j, double value) noexcept;
  const std::vector<double>& entries() const noexcept { return entries_; }
  double trace() const noexcept;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) =
      default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> entries_;
};

struct Spectrum {
  std::vector<double> values;  // ascending
  double kernel_tol = kDefaultKernelTol;

  std::size_t kernel_dimension() const noexcept;
  // Value at sorted index 1; 0 when there are fewer than two eigenvalues.
  double second_smallest() const noexcept;
  // Least eigenvalue above kernel_tol; 0 when there is none.
  double smallest_nonzero() const noexcept;
};

// L = D - A.
SymmetricMatrix graph_laplacian(const Graph& g);

// Full spectrum. Throws ValidationError when m.dim() == 0.
Spectrum eigenvalues_symmetric(const SymmetricMatrix& m,
                               double kernel_tol = kDefaultKernelTol);

// lambda_2 of the graph Laplacian. Throws ValidationError when n < 2.
double algebraic_connectivity(const Graph& g,
                              double kernel_tol = kDefaultKernelTol);

// lambda_2 / 2, the spectral lower bound on the edge connectivity.
double cheeger_lower_bound(const Graph& g,
                           double kernel_tol = kDefaultKernelTol);

}  // namespace netres
