#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>

#include "netres/error.hpp"
#include "netres/topology.hpp"

namespace netres {

IntMatrix::IntMatrix(std::size_t r, std::size_t c, std::vector<std::int64_t> d)
    : rows(r), cols(c), data(std::move(d)) {
  if (data.size() != rows * cols) {
    throw ValidationError("integer matrix: expected " +
                          std::to_string(rows * cols) + " entries, got " +
                          std::to_string(data.size()));
  }
}

bool IntMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(),
                     [](std::int64_t x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw ValidationError("matrix product shape mismatch");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t l = 0; l < a.cols; ++l) {
      const auto x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += x * b(l, j);
    }
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix out(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out(j, i) = a(i, j);
  return out;
}

IntMatrix BoundaryMatrix::to_dense() const {
  IntMatrix out(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& e : columns[j]) out(e.row, j) = e.sign;
  return out;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, std::size_t k) {
  if (k < 1 || k > c.max_dim()) {
    throw ValidationError("boundary_matrix: k=" + std::to_string(k) +
                          " outside [1, " + std::to_string(c.max_dim()) + "]");
  }
  BoundaryMatrix b;
  b.k = k;
  b.rows = c.count(k - 1);
  b.cols = c.count(k);
  b.columns.resize(b.cols);
  std::vector<Vertex> face(k);
  for (std::size_t j = 0; j < b.cols; ++j) {
    auto s = c.simplex(k, j);
    auto& col = b.columns[j];
    col.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      std::copy(s.begin(), s.begin() + i, face.begin());
      std::copy(s.begin() + i + 1, s.end(), face.begin() + i);
      auto row = c.index_of(face);
      if (!row) throw Error("complex is not closed under faces");
      col.push_back({static_cast<std::uint32_t>(*row),
                     static_cast<std::int8_t>(i % 2 == 0 ? 1 : -1)});
    }
    std::sort(col.begin(), col.end(),
              [](const auto& x, const auto& y) { return x.row < y.row; });
  }
  return b;
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

__extension__ using Int128 = __int128;

std::int64_t abs(std::int64_t x) { return x < 0 ? -x : x; }

// Fraction-free Gaussian elimination. After processing pivot r every entry
// of the trailing block is an (r+1)x(r+1) minor of the input, so each
// division by the previous pivot is exact.
template <class Int, class Combine>
std::size_t bareiss_rank(std::vector<Int> a, std::size_t rows, std::size_t cols,
                         Combine combine) {
  auto at = [&](std::size_t i, std::size_t j) -> Int& {
    return a[i * cols + j];
  };
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Smallest-magnitude nonzero pivot keeps intermediates small.
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      if (piv == rows || abs(at(i, c)) < abs(at(piv, c))) piv = i;
    }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    const Int p = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Int f = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j)
        at(i, j) = combine(p, at(i, j), f, at(r, j), prev);
      at(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t matrix_rank_exact(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  // Drop zero rows and columns up front; they never contribute.
  std::vector<std::size_t> keep_rows, keep_cols;
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m(i, j) != 0) {
        keep_rows.push_back(i);
        break;
      }
  }
  for (std::size_t j = 0; j < m.cols; ++j) {
    for (std::size_t i = 0; i < m.rows; ++i)
      if (m(i, j) != 0) {
        keep_cols.push_back(j);
        break;
      }
  }
  const auto rows = keep_rows.size(), cols = keep_cols.size();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::int64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a[i * cols + j] = m(keep_rows[i], keep_cols[j]);

  try {
    return bareiss_rank<std::int64_t>(
        a, rows, cols,
        [](std::int64_t p, std::int64_t x, std::int64_t f, std::int64_t y,
           std::int64_t prev) -> std::int64_t {
          const Int128 num = static_cast<Int128>(p) * x -
                             static_cast<Int128>(f) * y;
          const Int128 q = num / prev;
          if (q > std::numeric_limits<std::int64_t>::max() ||
              q < std::numeric_limits<std::int64_t>::min())
            throw Overflow{};
          return static_cast<std::int64_t>(q);
        });
  } catch (const Overflow&) {
    std::vector<BigInt> big(a.begin(), a.end());
    return bareiss_rank<BigInt>(
        std::move(big), rows, cols,
        [](const BigInt& p, const BigInt& x, const BigInt& f, const BigInt& y,
           const BigInt& prev) -> BigInt { return (p * x - f * y) / prev; });
  }
}

std::size_t matrix_rank_gf2(const IntMatrix& m) {
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(
      m.rows, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m(i, j) & 1) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    const auto w = c / 64;
    const auto bit = std::uint64_t{1} << (c % 64);
    std::size_t piv = rank;
    while (piv < m.rows && !(rows[piv][w] & bit)) ++piv;
    if (piv == m.rows) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i != rank && (rows[i][w] & bit)) {
        for (std::size_t x = w; x < words; ++x) rows[i][x] ^= rows[rank][x];
      }
    }
    ++rank;
  }
  return rank;
}

std::int64_t BettiProfile::euler_from_counts() const {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < counts.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(counts[k]);
  return chi;
}

std::int64_t BettiProfile::euler_from_betti() const {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < betti.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * betti[k];
  return chi;
}

BettiProfile betti_numbers(const SimplicialComplex& c, RankField field) {
  BettiProfile p;
  const auto top = c.max_dim();
  p.counts = c.counts();
  p.ranks.assign(top + 2, 0);  // ranks[K+1] == 0 by convention
  for (std::size_t k = 1; k <= top; ++k) {
    auto dense = boundary_matrix(c, k).to_dense();
    p.ranks[k] = field == RankField::rational ? matrix_rank_exact(dense)
                                              : matrix_rank_gf2(dense);
  }
  for (std::size_t k = 0; k <= top; ++k) {
    p.betti.push_back(static_cast<std::int64_t>(p.counts[k]) -
                      static_cast<std::int64_t>(p.ranks[k]) -
                      static_cast<std::int64_t>(p.ranks[k + 1]));
  }
  p.ranks.pop_back();
  return p;
}

SymmetricMatrix hodge_laplacian(const SimplicialComplex& c, std::size_t k) {
  if (k > c.max_dim()) {
    throw ValidationError("hodge_laplacian: k=" + std::to_string(k) +
                          " exceeds complex dimension " +
                          std::to_string(c.max_dim()));
  }
  const auto n = c.count(k);
  IntMatrix acc(n, n);

  // Down part d_k^T d_k: k-simplices sharing a (k-1)-face.
  if (k >= 1) {
    const auto down = boundary_matrix(c, k);
    std::vector<std::vector<std::pair<std::uint32_t, int>>> by_row(down.rows);
    for (std::size_t j = 0; j < down.cols; ++j)
      for (const auto& e : down.columns[j])
        by_row[e.row].push_back({static_cast<std::uint32_t>(j), e.sign});
    for (const auto& row : by_row)
      for (const auto& [a, sa] : row)
        for (const auto& [b, sb] : row) acc(a, b) += sa * sb;
  }
  // Up part d_{k+1} d_{k+1}^T: k-simplices that are faces of a common
  // (k+1)-simplex.
  if (k + 1 <= c.max_dim()) {
    const auto up = boundary_matrix(c, k + 1);
    for (const auto& col : up.columns)
      for (const auto& x : col)
        for (const auto& y : col) acc(x.row, y.row) += x.sign * y.sign;
  }

  std::vector<double> entries(acc.data.begin(), acc.data.end());
  return SymmetricMatrix(n, std::move(entries));
}

std::string to_string(L2kMode mode) {
  return mode == L2kMode::second_smallest ? "second_smallest"
                                          : "smallest_nonzero";
}

Spectrum hodge_spectrum(const SimplicialComplex& c, std::size_t k,
                        double kernel_tol) {
  auto L = hodge_laplacian(c, k);
  if (L.dim() == 0) return Spectrum{{}, kernel_tol};
  return eigenvalues_symmetric(L, kernel_tol);
}

double lambda2_from_spectrum(const Spectrum& s, L2kMode mode) {
  if (s.values.size() <= 1) return 0.0;
  return mode == L2kMode::second_smallest ? s.second_smallest()
                                          : s.smallest_nonzero();
}

double lambda2_k(const SimplicialComplex& c, std::size_t k, L2kMode mode,
                 double kernel_tol) {
  if (k > c.max_dim()) {
    throw ValidationError("lambda2_k: k=" + std::to_string(k) +
                          " exceeds complex dimension " +
                          std::to_string(c.max_dim()));
  }
  return lambda2_from_spectrum(hodge_spectrum(c, k, kernel_tol), mode);
}

}  // namespace netres
