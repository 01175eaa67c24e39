#include "netres/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

#include "netres/error.hpp"

namespace netres {

SymmetricMatrix::SymmetricMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, 0.0) {}

SymmetricMatrix::SymmetricMatrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw ValidationError("symmetric matrix: expected " +
                          std::to_string(dim_ * dim_) + " entries, got " +
                          std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (entries_[i * dim_ + j] != entries_[j * dim_ + i])
        throw ValidationError("symmetric matrix: entries (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ") and its transpose differ");
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) noexcept {
  entries_[i * dim_ + j] = value;
  entries_[j * dim_ + i] = value;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double value) noexcept {
  entries_[i * dim_ + j] += value;
  if (i != j) entries_[j * dim_ + i] += value;
}

double SymmetricMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += entries_[i * dim_ + i];
  return t;
}

std::size_t Spectrum::kernel_dimension() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(),
                    [&](double x) { return x < kernel_tol; }));
}

double Spectrum::second_smallest() const noexcept {
  if (values.size() < 2) return 0.0;
  // A kernel of dimension >= 2 means the value is zero up to round-off.
  return values[1] < kernel_tol ? 0.0 : values[1];
}

double Spectrum::smallest_nonzero() const noexcept {
  auto it = std::find_if(values.begin(), values.end(),
                         [&](double x) { return x >= kernel_tol; });
  return it == values.end() ? 0.0 : *it;
}

SymmetricMatrix graph_laplacian(const Graph& g) {
  SymmetricMatrix L(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    L.set(v, v, static_cast<double>(g.degree(v)));
  for (const auto& e : g.edges()) L.set(e.u, e.v, -1.0);
  return L;
}

Spectrum eigenvalues_symmetric(const SymmetricMatrix& m, double kernel_tol) {
  if (m.dim() == 0) throw ValidationError("eigenvalues of a 0x0 matrix");
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      view(m.entries().data(), n, n);
  Eigen::MatrixXd dense = view;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("symmetric eigensolver did not converge (dim " +
                std::to_string(m.dim()) + ")");
  }
  Spectrum s;
  s.kernel_tol = kernel_tol;
  s.values.assign(solver.eigenvalues().data(),
                  solver.eigenvalues().data() + n);
  std::sort(s.values.begin(), s.values.end());
  return s;
}

double algebraic_connectivity(const Graph& g, double kernel_tol) {
  if (g.num_vertices() < 2) {
    throw ValidationError("algebraic connectivity needs n >= 2, got n=" +
                          std::to_string(g.num_vertices()));
  }
  return eigenvalues_symmetric(graph_laplacian(g), kernel_tol)
      .second_smallest();
}

double cheeger_lower_bound(const Graph& g, double kernel_tol) {
  return algebraic_connectivity(g, kernel_tol) / 2.0;
}

}  // namespace netres
