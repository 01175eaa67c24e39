#include "netres/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "netres/error.hpp"

namespace netres {

std::string to_string(BoundVariant v) {
  return v == BoundVariant::statement_vol_over_2 ? "statement_vol_over_2"
                                                 : "proof_vol_over_2k";
}

double GraphInvariants::lambda2_k(std::size_t k, L2kMode mode) const {
  if (k >= hodge.size()) return 0.0;
  return lambda2_from_spectrum(hodge[k], mode);
}

GraphInvariants compute_invariants(const Graph& g, const SimplicialComplex& c,
                                   double kernel_tol) {
  GraphInvariants inv;
  inv.n = g.num_vertices();
  inv.m = g.num_edges();
  inv.vol = volume(g);
  inv.kernel_tol = kernel_tol;
  inv.lambda2 = inv.n >= 2 ? algebraic_connectivity(g, kernel_tol) : 0.0;
  inv.betti = betti_numbers(c);
  for (std::size_t k = 0; k <= c.max_dim(); ++k)
    inv.hodge.push_back(hodge_spectrum(c, k, kernel_tol));
  return inv;
}

std::optional<bool> BoundReport::violated(CutMode mode) const {
  const auto& cut = actual.get(mode);
  if (!cut) return std::nullopt;
  const bool exceeds = bound > static_cast<double>(cut->size) + kViolationTol;
  if (cut->proven_optimal || exceeds) return exceeds;
  return std::nullopt;
}

BoundReport theorem34_bound(const GraphInvariants& inv, std::size_t k,
                            BoundVariant variant, L2kMode l2k_mode,
                            ActualCuts actual) {
  if (k < 2) {
    throw ValidationError("bound needs k >= 2, got k=" + std::to_string(k));
  }
  if (k - 1 >= inv.hodge.size()) {
    throw ValidationError(
        "k=" + std::to_string(k) + " needs a complex of dimension >= " +
        std::to_string(k - 1) + "; rebuild with max_dim >= " +
        std::to_string(k - 1));
  }
  BoundReport r;
  r.k = k;
  r.variant = variant;
  r.l2k_mode = l2k_mode;
  r.lambda2 = inv.lambda2;
  r.beta0 = inv.betti.at(0);
  r.beta_km1 = inv.betti.at(k - 1);
  r.lambda2_km1 = inv.lambda2_k(k - 1, l2k_mode);
  r.vol = inv.vol;

  const double ratio =
      r.beta0 > 0 ? static_cast<double>(r.beta_km1) / static_cast<double>(r.beta0)
                  : 0.0;
  r.term1 = r.lambda2 * std::min(ratio, 1.0);
  const double per_k = r.lambda2_km1 * static_cast<double>(r.vol) /
                       (2.0 * static_cast<double>(k));
  r.term2 = variant == BoundVariant::proof_vol_over_2k
                ? per_k
                : static_cast<double>(k) * per_k;
  r.bound = r.term1 + r.term2;
  r.actual = std::move(actual);
  return r;
}

BoundReport theorem34_bound(const Graph& g, const SimplicialComplex& c,
                            std::size_t k, BoundVariant variant,
                            L2kMode l2k_mode, ActualCuts actual) {
  if (k >= 1 && k - 1 > c.max_dim()) {
    throw ValidationError(
        "k=" + std::to_string(k) + " needs a complex of dimension >= " +
        std::to_string(k - 1) + "; rebuild with max_dim >= " +
        std::to_string(k - 1));
  }
  return theorem34_bound(compute_invariants(g, c), k, variant, l2k_mode,
                         std::move(actual));
}

double random_graph_prediction(std::size_t n, double p, std::int64_t beta_km1) {
  if (n < 1) throw ValidationError("prediction needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0,1]");
  if (beta_km1 < 0) throw ValidationError("beta must be nonnegative");
  const double cap =
      beta_km1 == 0 ? 1.0 : std::min(1.0 / static_cast<double>(beta_km1), 1.0);
  return static_cast<double>(n) * p * cap;
}

std::optional<double> TightnessReport::violation_fraction() const {
  if (decided == 0) return std::nullopt;
  return static_cast<double>(violations) / static_cast<double>(decided);
}

TightnessReport tightness_report(const std::vector<CorpusEntry>& corpus,
                                 const TightnessConfig& config) {
  TightnessReport report;
  for (const auto& entry : corpus) {
    std::size_t max_k = 2;
    for (auto k : entry.k_values) max_k = std::max(max_k, k);
    const auto dim = std::max(config.max_dim, max_k - 1);
    const auto complex = clique_complex(entry.graph, dim);
    const auto inv = compute_invariants(entry.graph, complex, config.kernel_tol);

    auto ks = entry.k_values;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (auto k : ks) {
      ActualCuts cuts;
      if (config.compute_actual) {
        for (auto mode : config.modes) {
          if (mode == CutMode::component_count && k > inv.n) continue;
          auto cut = lambda_s(entry.graph, k, mode, config.budget);
          (mode == CutMode::size_bounded ? cuts.size_bounded
                                         : cuts.component_count) = cut;
        }
      }
      for (auto variant : config.variants) {
        for (auto mode : config.modes) {
          for (auto l2k : config.l2k_modes) {
            auto b = theorem34_bound(inv, k, variant, l2k, cuts);
            TightnessRow row;
            row.graph_id = entry.id;
            row.k = k;
            row.variant = variant;
            row.mode = mode;
            row.l2k_mode = l2k;
            row.term1 = b.term1;
            row.term2 = b.term2;
            row.bound = b.bound;
            if (const auto& cut = cuts.get(mode)) {
              row.actual = cut->size;
              row.proven_optimal = cut->proven_optimal;
              if (b.bound != 0.0)
                row.ratio = static_cast<double>(cut->size) / b.bound;
            }
            row.violated = b.violated(mode);
            if (row.violated) {
              ++report.decided;
              if (*row.violated) ++report.violations;
            }
            report.rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return report;
}

std::string discrepancy_ledger() {
  return R"(Discrepancy notes for the published spectral-homological bound
===============================================================

1. Two readings of k-component edge connectivity.
   The displayed definition (no component of G - F has >= k vertices) makes
   lambda_s(2) = |E| for every graph, contradicting the stated identity
   lambda_s(2) = lambda(G). The component_count reading (G - F has >= k
   components) satisfies that identity. Reports state the mode of every
   "actual" column: size_bounded (default, literal) or component_count.

2. Second term of the bound: vol/2 vs vol/(2k).
   The theorem statement uses lambda2^(k-1) * vol(G)/2 while its proof
   derives lambda2^(k-1) * vol(G)/(2k). Both are reported as the variants
   statement_vol_over_2 and proof_vol_over_2k.

3. vol(G) is not defined in the source. Reports use vol(G) = sum of degrees
   = 2|E|.

4. The simplicial complex of a graph is not specified. Reports use the
   clique (flag) complex truncated at --max-dim (default 3).

5. lambda2^(k) is ambiguous when ker L_k has dimension >= 2 (the second
   smallest eigenvalue is then 0). --l2k second uses the literal second
   smallest eigenvalue (default); --l2k nonzero uses the smallest nonzero
   eigenvalue.

6. The proof chains lambda2/2 >= lambda2 * beta0/beta1 without
   justification; it fails whenever beta1 < 2 beta0. Not asserted.

7. The published tables cannot be reproduced: the listed bound values are
   orders of magnitude below lambda2^(1) * vol/2 for a 6594-edge graph, and
   the listed actual values (4, 16, 12) are impossible under the literal
   definition, which forces lambda_s(2) = |E|.

8. The random-graph prediction uses min(1/beta_{k-1}, 1) where the bound
   uses min(beta_{k-1}/beta0, 1). Both formulas are evaluated as written.
   beta_{k-1} = 0 gives term1 = 0 in the bound and a factor of 1 in the
   prediction.

9. The bound is evaluated, never enforced. It already fails on K_3 (k=2:
   bound 9 > lambda_s = 3) and C_4 (k=2, proof variant: bound 6 > 4);
   violations are reported as data.
)";
}

}  // namespace netres
