#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "netres/bounds.hpp"
#include "netres/error.hpp"
#include "netres/generators.hpp"
#include "oracles.hpp"

using namespace netres;

namespace {

Graph complete(std::size_t n) { return generate({family::Complete{n}}); }
Graph cycle(std::size_t n) { return generate({family::Cycle{n}}); }

constexpr auto kStatement = BoundVariant::statement_vol_over_2;
constexpr auto kProof = BoundVariant::proof_vol_over_2k;
constexpr auto kSecond = L2kMode::second_smallest;

BoundReport bound_with_actual(const Graph& g, std::size_t k, BoundVariant v) {
  auto c = clique_complex(g, 3);
  ActualCuts actual;
  actual.size_bounded = lambda_s(g, k, CutMode::size_bounded);
  return theorem34_bound(g, c, k, v, kSecond, actual);
}

}  // namespace

TEST_CASE("K3 statement variant, k = 2") {
  auto r = bound_with_actual(complete(3), 2, kStatement);
  CHECK(r.term1 == 0.0);
  CHECK(r.vol == 6);
  CHECK(std::abs(r.lambda2_km1 - 3.0) < 1e-9);
  CHECK(std::abs(r.term2 - 9.0) < 1e-9);
  CHECK(std::abs(r.bound - 9.0) < 1e-9);
  REQUIRE(r.actual.size_bounded.has_value());
  CHECK(r.actual.size_bounded->size == 3);
  CHECK(r.violated(CutMode::size_bounded) == std::optional<bool>(true));
  CHECK_FALSE(r.violated(CutMode::component_count).has_value());
}

TEST_CASE("C4 proof variant, k = 2") {
  auto r = bound_with_actual(cycle(4), 2, kProof);
  CHECK(std::abs(r.lambda2 - 2.0) < 1e-9);
  CHECK(r.beta0 == 1);
  CHECK(r.beta_km1 == 1);
  CHECK(std::abs(r.term1 - 2.0) < 1e-9);
  CHECK(std::abs(r.term2 - 4.0) < 1e-9);
  CHECK(std::abs(r.bound - 6.0) < 1e-9);
  CHECK(r.actual.size_bounded->size == 4);
  CHECK(r.violated(CutMode::size_bounded) == std::optional<bool>(true));
}

TEST_CASE("beta_{k-1} = 0 gives term1 = 0") {
  for (std::size_t n = 3; n <= 7; ++n) {
    auto g = complete(n);
    auto r = theorem34_bound(g, clique_complex(g, 3), 2, kStatement, kSecond);
    CHECK(r.beta_km1 == 0);
    CHECK(r.term1 == 0.0);
  }
}

TEST_CASE("statement term2 is exactly k times the proof term2") {
  auto g = generate({family::ErdosRenyi{12, 0.3}, 5});
  auto c = clique_complex(g, 3);
  auto inv = compute_invariants(g, c);
  for (std::size_t k = 2; k <= 4; ++k) {
    for (auto mode : {L2kMode::second_smallest, L2kMode::smallest_nonzero}) {
      auto s = theorem34_bound(inv, k, kStatement, mode);
      auto p = theorem34_bound(inv, k, kProof, mode);
      CHECK(s.term2 == static_cast<double>(k) * p.term2);
      CHECK(s.term1 == p.term1);
      CHECK(s.bound >= p.bound);
    }
  }
}

TEST_CASE("bound terms are non-negative and finite") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = generate({family::ErdosRenyi{4 + seed % 12, 0.1 + 0.02 * seed}, seed});
    auto inv = compute_invariants(g, clique_complex(g, 3));
    for (std::size_t k = 2; k <= 4; ++k) {
      for (auto v : {kStatement, kProof}) {
        auto r = theorem34_bound(inv, k, v, kSecond);
        CHECK(r.term1 >= 0.0);
        CHECK(r.term2 >= 0.0);
        CHECK(std::isfinite(r.bound));
        CHECK(r.bound == r.term1 + r.term2);
        CHECK(r.term1 <= r.lambda2 + 1e-12);
      }
    }
  }
}

TEST_CASE("disconnected graphs have lambda2 = 0 and term1 = 0") {
  auto g = disjoint_union(cycle(5), Graph(1));
  auto r = theorem34_bound(g, clique_complex(g, 3), 2, kProof, kSecond);
  CHECK(r.lambda2 == 0.0);
  CHECK(r.term1 == 0.0);
  CHECK(r.beta0 == 2);
}

TEST_CASE("theorem34_bound validation") {
  auto g = complete(4);
  CHECK_THROWS_AS(theorem34_bound(g, clique_complex(g, 3), 1, kProof, kSecond),
                  ValidationError);
  CHECK_THROWS_AS(theorem34_bound(g, clique_complex(g, 1), 3, kProof, kSecond),
                  ValidationError);
  CHECK_NOTHROW(theorem34_bound(g, clique_complex(g, 1), 2, kProof, kSecond));
}

TEST_CASE("violation status needs an optimal cut or an exceeded upper bound") {
  auto g = generate({family::ErdosRenyi{30, 0.3}, 3});
  auto c = clique_complex(g, 3);
  ActualCuts actual;
  actual.size_bounded = lambda_s(g, 4, CutMode::size_bounded,
                                 SearchBudget{50, std::chrono::milliseconds(60'000)});
  REQUIRE_FALSE(actual.size_bounded->proven_optimal);
  auto r = theorem34_bound(g, c, 4, kStatement, kSecond, actual);
  const double ub = static_cast<double>(actual.size_bounded->size);
  if (r.bound > ub + kViolationTol)
    CHECK(r.violated(CutMode::size_bounded) == std::optional<bool>(true));
  else
    CHECK_FALSE(r.violated(CutMode::size_bounded).has_value());
}

TEST_CASE("random_graph_prediction") {
  CHECK(std::abs(random_graph_prediction(100, 0.05, 1) - 5.0) < 1e-12);
  CHECK(std::abs(random_graph_prediction(100, 0.05, 4) - 1.25) < 1e-12);
  CHECK(std::abs(random_graph_prediction(100, 0.05, 0) - 5.0) < 1e-12);
  CHECK(random_graph_prediction(100, 0.0, 3) == 0.0);
  double prev = -1.0;
  for (double p = 0.0; p <= 1.0; p += 0.05) {
    double x = random_graph_prediction(50, p, 2);
    CHECK(x >= prev);
    prev = x;
  }
  CHECK(random_graph_prediction(50, 0.3, 1) >= random_graph_prediction(50, 0.3, 2));
  CHECK(random_graph_prediction(50, 0.3, 2) >= random_graph_prediction(50, 0.3, 5));
}

TEST_CASE("invariants are deterministic and relabelling-invariant") {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = generate({family::ErdosRenyi{11, 0.4}, seed});
    auto a = theorem34_bound(g, clique_complex(g, 3), 3, kProof, kSecond);
    auto b = theorem34_bound(g, clique_complex(g, 3), 3, kProof, kSecond);
    CHECK(a.bound == b.bound);

    std::vector<Vertex> perm(11);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto h = g.relabeled(perm);
    auto r = theorem34_bound(h, clique_complex(h, 3), 3, kProof, kSecond);
    CHECK(r.beta0 == a.beta0);
    CHECK(r.beta_km1 == a.beta_km1);
    CHECK(r.bound == doctest::Approx(a.bound).epsilon(1e-9));
  }
}

TEST_CASE("tightness_report shape and variant relation") {
  std::vector<CorpusEntry> corpus{{"K3", complete(3), {2, 3}},
                                  {"C4", cycle(4), {2, 3}},
                                  {"K4", complete(4), {2, 3}}};
  TightnessConfig cfg;
  auto rep = tightness_report(corpus, cfg);
  CHECK(rep.rows.size() == 12);  // 3 graphs x 2 k x 2 variants
  for (std::size_t i = 0; i < rep.rows.size(); i += 2) {
    const auto& s = rep.rows[i];
    const auto& p = rep.rows[i + 1];
    CHECK(s.graph_id == p.graph_id);
    CHECK(s.k == p.k);
    CHECK(s.variant == kStatement);
    CHECK(p.variant == kProof);
    CHECK(s.term2 == static_cast<double>(s.k) * p.term2);
    CHECK(s.actual == p.actual);
    CHECK(s.proven_optimal);
    if (s.bound > 0) {
      REQUIRE(s.ratio.has_value());
      CHECK(*s.ratio == doctest::Approx(static_cast<double>(*s.actual) / s.bound));
    }
  }
  CHECK(rep.decided == 12);
  std::size_t v = 0;
  for (const auto& r : rep.rows) v += r.violated.value_or(false);
  CHECK(rep.violations == v);
  REQUIRE(rep.violation_fraction().has_value());
  CHECK(*rep.violation_fraction() == doctest::Approx(double(v) / 12));

  cfg.compute_actual = false;
  auto bare = tightness_report(corpus, cfg);
  CHECK(bare.decided == 0);
  CHECK_FALSE(bare.violation_fraction().has_value());
  for (const auto& r : bare.rows) CHECK_FALSE(r.actual.has_value());
}

TEST_CASE("discrepancy ledger is non-empty") {
  CHECK(discrepancy_ledger().size() > 100);
}
