// Acceptance checks: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "netres/bounds.hpp"
#include "netres/connectivity.hpp"
#include "netres/generators.hpp"
#include "netres/harness.hpp"
#include "netres/spectral.hpp"
#include "netres/topology.hpp"

using namespace netres;

namespace {

const std::string kFixtures = NETRES_FIXTURE_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void run(const std::string& name, double limit_s,
         const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.ok = false;
    o.detail += " (over time limit)";
  }
  if (!o.ok) ++failures;
  std::printf("%s  %-28s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", name.c_str(),
              secs, o.detail.c_str());
  std::fflush(stdout);
}

// Complexes from every generator family plus the octahedron fixture.
std::vector<SimplicialComplex> corpus_complexes() {
  std::vector<SimplicialComplex> out;
  for (const auto& e : small_graph_corpus()) out.push_back(clique_complex(e.graph, 3));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    out.push_back(clique_complex(generate({family::ErdosRenyi{16, 0.5}, seed}), 3));
    out.push_back(clique_complex(generate({family::RandomRegular{14, 6}, seed}), 3));
    out.push_back(clique_complex(generate({family::WattsStrogatz{16, 6, 0.3}, seed}), 3));
  }
  out.push_back(load_facet_list_file(kFixtures + "/octahedron.facets").complex);
  return out;
}

Outcome closed_form_spectra() {
  double worst = 0.0;
  for (std::size_t n = 3; n <= 8; ++n) {
    auto l2 = algebraic_connectivity(generate({family::Complete{n}}));
    worst = std::max(worst, std::abs(l2 - static_cast<double>(n)));
  }
  const double pi = std::acos(-1.0);
  for (std::size_t n = 3; n <= 12; ++n) {
    auto l2 = algebraic_connectivity(generate({family::Cycle{n}}));
    worst = std::max(worst, std::abs(l2 - (2.0 - 2.0 * std::cos(2 * pi / n))));
  }
  return {worst <= 1e-9, "max error " + format_number(worst)};
}

Outcome hodge_cross_validation() {
  const double ps[] = {0.2, 0.4, 0.6};
  std::size_t checks = 0, mismatches = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 6 + seed % 10;  // 6..15
    auto g = generate({family::ErdosRenyi{n, ps[seed % 3]}, seed});
    auto c = clique_complex(g, 3);
    auto betti = betti_numbers(c);
    for (std::size_t k = 0; k <= 2; ++k) {
      auto s = hodge_spectrum(c, k);
      std::size_t small = 0;
      for (double v : s.values) small += v < 1e-8;
      ++checks;
      mismatches += static_cast<std::int64_t>(small) != betti.at(k);
    }
  }
  return {mismatches == 0, std::to_string(checks) + " checks, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome chain_complex_identity() {
  std::size_t products = 0, violations = 0;
  for (const auto& c : corpus_complexes()) {
    for (std::size_t k = 1; k < c.max_dim(); ++k) {
      auto prod = boundary_matrix(c, k).to_dense() *
                  boundary_matrix(c, k + 1).to_dense();
      ++products;
      violations += !prod.is_zero();
    }
  }
  return {violations == 0, std::to_string(products) + " products, " +
                               std::to_string(violations) + " nonzero"};
}

Outcome topology_fixtures() {
  auto c4 = betti_numbers(clique_complex(generate({family::Cycle{4}}), 3));
  auto k4 = betti_numbers(clique_complex(generate({family::Complete{4}}), 3));
  auto oct = betti_numbers(
      load_facet_list_file(kFixtures + "/octahedron.facets").complex);
  bool ok = c4.at(1) == 1;
  for (std::size_t k = 1; k < k4.betti.size(); ++k) ok = ok && k4.at(k) == 0;
  ok = ok && oct.at(2) == 1 && oct.at(1) == 0;
  std::ostringstream d;
  d << "C4 b1=" << c4.at(1) << ", K4 b1..b3=" << k4.at(1) << k4.at(2)
    << k4.at(3) << ", octahedron b1=" << oct.at(1) << " b2=" << oct.at(2);
  return {ok, d.str()};
}

Outcome euler_identity() {
  std::size_t n = 0, bad = 0;
  for (const auto& c : corpus_complexes()) {
    auto p = betti_numbers(c);
    ++n;
    bad += p.euler_from_counts() != p.euler_from_betti();
  }
  return {bad == 0, std::to_string(n) + " complexes, " + std::to_string(bad) +
                        " mismatches"};
}

Outcome oracle_equivalence() {
  auto corpus = small_graph_corpus(8, 20);
  auto s = oracle_check(corpus);
  const bool ok = corpus.size() >= 60 && s.failures.empty() && s.passed == s.cases;
  std::string d = std::to_string(s.graphs) + " graphs, " + std::to_string(s.cases) +
                  " cases, " + std::to_string(s.failures.size()) + " mismatches";
  if (!s.failures.empty()) d += "; first: " + s.failures.front();
  return {ok, d};
}

Outcome count_mode_vs_maxflow() {
  std::size_t checked = 0, bad = 0;
  for (std::uint64_t seed = 0; checked < 30; ++seed) {
    const std::size_t n = 8 + seed % 13;  // 8..20
    auto g = generate({family::ErdosRenyi{n, 0.3}, 1000 + seed});
    if (connected_components(g).size() != 1) continue;
    ++checked;
    auto cut = lambda_s(g, 2, CutMode::component_count);
    bad += !cut.proven_optimal || cut.size != classical_edge_connectivity(g);
  }
  return {bad == 0, std::to_string(checked) + " graphs, " + std::to_string(bad) +
                        " mismatches"};
}

Outcome cheeger_property() {
  std::size_t checked = 0, bad = 0;
  for (std::uint64_t seed = 0; checked < 100; ++seed) {
    const std::size_t n = 5 + seed % 26;  // 5..30
    auto g = generate({family::ErdosRenyi{n, 0.35}, 5000 + seed});
    if (connected_components(g).size() != 1) continue;
    ++checked;
    bad += cheeger_lower_bound(g) >
           static_cast<double>(classical_edge_connectivity(g)) + 1e-9;
  }
  return {bad == 0, std::to_string(checked) + " graphs, " + std::to_string(bad) +
                        " violations"};
}

Outcome bound_regression() {
  auto eval = [](const Graph& g, BoundVariant v) {
    ActualCuts a;
    a.size_bounded = lambda_s(g, 2, CutMode::size_bounded);
    return theorem34_bound(g, clique_complex(g, 3), 2, v,
                           L2kMode::second_smallest, a);
  };
  auto k3 = eval(generate({family::Complete{3}}), BoundVariant::statement_vol_over_2);
  auto c4 = eval(generate({family::Cycle{4}}), BoundVariant::proof_vol_over_2k);
  const bool ok = std::abs(k3.bound - 9.0) <= 1e-9 &&
                  k3.actual.size_bounded->size == 3 &&
                  k3.violated(CutMode::size_bounded) == std::optional<bool>(true) &&
                  std::abs(c4.bound - 6.0) <= 1e-9 &&
                  c4.actual.size_bounded->size == 4 &&
                  c4.violated(CutMode::size_bounded) == std::optional<bool>(true);
  return {ok, "K3 bound " + format_number(k3.bound) + " vs 3 (violated), C4 bound " +
                  format_number(c4.bound) + " vs 4 (violated)"};
}

Outcome variant_relation() {
  std::vector<CorpusEntry> corpus;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    corpus.push_back({"er" + std::to_string(seed),
                      generate({family::ErdosRenyi{10, 0.45}, seed}),
                      {2, 3}});
  }
  TightnessConfig cfg;
  cfg.compute_actual = false;
  auto rep = tightness_report(corpus, cfg);
  std::size_t pairs = 0, bad = 0;
  for (std::size_t i = 0; i + 1 < rep.rows.size(); i += 2) {
    const auto& s = rep.rows[i];
    const auto& p = rep.rows[i + 1];
    ++pairs;
    bad += s.variant != BoundVariant::statement_vol_over_2 ||
           p.variant != BoundVariant::proof_vol_over_2k || s.k != p.k ||
           s.term2 != static_cast<double>(s.k) * p.term2;
  }
  return {rep.rows.size() >= 50 && bad == 0,
          std::to_string(rep.rows.size()) + " rows, " + std::to_string(bad) +
              " mismatched pairs of " + std::to_string(pairs)};
}

SweepConfig threshold_config() {
  SweepConfig cfg;
  cfg.base = parse_graph_spec("er:n=24,p=0.1");
  cfg.param = "p";
  cfg.values = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  cfg.values_logn = true;
  cfg.seeds = 20;
  cfg.master_seed = 2024;
  cfg.k_values = {3};
  // A node budget, unlike a wall-clock budget, keeps the output reproducible.
  cfg.budget.max_nodes = 200'000;
  cfg.budget.max_time = std::chrono::hours(1);
  return cfg;
}

Outcome determinism() {
  auto cfg = threshold_config();
  cfg.values = {1.0, 2.0};
  cfg.seeds = 10;
  auto a = to_csv(sweep(cfg));
  cfg.jobs = 1;
  auto b = to_csv(sweep(cfg));
  return {a == b && !a.empty(),
          std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "differ")};
}

Outcome threshold_sweep() {
  auto rep = sweep(threshold_config());
  std::size_t bad = 0, optimal_rows = 0;
  for (const auto& r : rep.rows) {
    const bool populated = r.actual.has_value() && r.ratio.has_value() &&
                           r.prediction.mean > 0;
    bad += !populated || !std::isfinite(*r.ratio) || !(*r.ratio > 0);
    optimal_rows += r.optimal_fraction == 1.0;
  }
  return {rep.rows.size() == 6 && bad == 0,
          std::to_string(rep.rows.size()) + " rows, " + std::to_string(bad) +
              " unpopulated or non-positive, " + std::to_string(optimal_rows) +
              " fully optimal"};
}

}  // namespace

int main() {
  run("closed-form spectra", 1, closed_form_spectra);
  run("hodge cross-validation", 60, hodge_cross_validation);
  run("chain-complex identity", 0, chain_complex_identity);
  run("topology fixtures", 0, topology_fixtures);
  run("euler characteristic", 0, euler_identity);
  run("oracle equivalence", 300, oracle_equivalence);
  run("count mode = max-flow", 0, count_mode_vs_maxflow);
  run("cheeger property", 0, cheeger_property);
  run("bound regression", 0, bound_regression);
  run("variant relation", 0, variant_relation);
  run("sweep determinism", 0, determinism);
  run("threshold sweep", 600, threshold_sweep);
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
