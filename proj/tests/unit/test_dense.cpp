#include <doctest.h>

#include <cmath>

#include "graphdiam/centers.hpp"
#include "graphdiam/dense.hpp"
#include "graphdiam/diam_sparse.hpp"
#include "graphdiam/exact.hpp"
#include "graphdiam/spanner.hpp"
#include "graphdiam/st_diameter.hpp"
#include "oracles.hpp"

using namespace graphdiam;
using namespace testing_support;

namespace {

// bunch and cluster invariants from the definition, checked against APSP
void check_centers(const Graph& g, const CenterData& c, const Matrix& d) {
  const Vertex n = g.vertex_count();
  REQUIRE(!c.A.empty());
  const std::uint64_t s = (c.p.den + c.p.num - 1) / c.p.num;
  std::vector<std::vector<Vertex>> inverse(n);
  for (Vertex v = 0; v < n; ++v) {
    Dist dA = kUnreachable;
    for (Vertex a : c.A) dA = std::min(dA, d[v][a]);
    REQUIRE(c.dist_to_A[v] == dA);
    REQUIRE(d[v][c.pivot[v]] == dA);
    REQUIRE(c.in_A[c.pivot[v]]);
    std::vector<Vertex> expect;
    for (Vertex u = 0; u < n; ++u) {
      if (d[v][u] < dA) expect.push_back(u);
    }
    std::vector<Vertex> got;
    for (const BunchEntry& e : c.bunches[v]) {
      got.push_back(e.vertex);
      REQUIRE(e.dist == d[v][e.vertex]);
      inverse[e.vertex].push_back(v);
    }
    std::sort(got.begin(), got.end());
    REQUIRE(got == expect);
    REQUIRE(got.size() <= s);
    if (!c.in_A[v]) REQUIRE(std::binary_search(got.begin(), got.end(), v));
  }
  for (Vertex w = 0; w < n; ++w) {
    std::vector<Vertex> members;
    for (const ClusterEntry& e : c.clusters[w]) {
      members.push_back(e.member);
      REQUIRE(e.dist == d[e.member][w]);
    }
    REQUIRE(members == inverse[w]);
    REQUIRE(members.size() * c.p.num <= 4 * c.p.den);
  }
}

Ratio inverse_sqrt(Vertex n) { return {1, ceil_sqrt(n)}; }

}  // namespace

TEST_CASE("greedy hitting set") {
  CHECK(greedy_hitting_set(5, {{0, 1}, {1, 2}, {1, 3}}) == std::vector<Vertex>{1});
  CHECK(greedy_hitting_set(5, {{0}, {4}, {2, 4}}) == std::vector<Vertex>{0, 4});
  CHECK(greedy_hitting_set(3, {}).empty());
  CHECK_THROWS_AS(greedy_hitting_set(3, {{}}), PreconditionError);
}

TEST_CASE("centers on complete graph, path and star") {
  const Graph k9 = complete_graph(9);
  check_centers(k9, compute_centers(k9, {1, 3}, 0), apsp_relaxation(k9));
  const Graph p16 = path_graph(16);
  check_centers(p16, compute_centers(p16, {1, 4}, 0), apsp_relaxation(p16));
  const Graph star = star_graph(8);
  const CenterData c = compute_centers(star, {1, 3}, 0);
  check_centers(star, c, apsp_relaxation(star));
  CHECK(c.in_A[0]);
  CHECK_THROWS_AS(compute_centers(cycle_graph(4, true), {1, 2}, 0), PreconditionError);
  CHECK_THROWS_AS(compute_centers(p16, {0, 2}, 0), PreconditionError);
}

TEST_CASE("property: centers satisfy the bunch and cluster bounds") {
  testing_support::Rng rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<Vertex>(uniform(rng, 1, 120));
    const Graph g = random_connected(rng, n, uniform(rng, 0, 3 * n));
    const Matrix d = apsp_relaxation(g);
    for (Ratio p : {Ratio{1, 2}, Ratio{1, 4}, inverse_sqrt(n)}) check_centers(g, compute_centers(g, p, trial), d);
  }
}

TEST_CASE("property: intersecting bunches give exact pair estimates, disjoint ones the pivot bound") {
  testing_support::Rng rng(52);
  for (int trial = 0; trial < 25; ++trial) {
    const auto n = static_cast<Vertex>(uniform(rng, 2, 80));
    const Graph g = random_connected(rng, n, uniform(rng, 0, 3 * n));
    const Matrix d = apsp_relaxation(g);
    const CenterData c = compute_centers(g, inverse_sqrt(n), trial);
    const EstimateMatrix step1 = cluster_pair_estimates(c);
    EstimateMatrix full = step1;
    fill_from_pivots(full, c);
    for (Vertex u = 0; u < n; ++u) {
      std::vector<Vertex> bu;
      for (const BunchEntry& e : c.bunches[u]) bu.push_back(e.vertex);
      std::sort(bu.begin(), bu.end());
      for (Vertex v = 0; v < n; ++v) {
        bool meet = false;
        for (const BunchEntry& e : c.bunches[v]) meet = meet || std::binary_search(bu.begin(), bu.end(), e.vertex);
        if (meet && u != v) {
          REQUIRE(step1.at(u, v) == d[u][v]);
        } else if (u != v) {
          REQUIRE(c.dist_to_A[u] + c.dist_to_A[v] <= d[u][v] + 1);
        }
        REQUIRE(full.at(u, v) <= d[u][v]);
      }
    }
  }
}

TEST_CASE("spanner keeps trees whole and stretches K_25 by at most 2") {
  testing_support::Rng rng(53);
  const Graph tree = random_connected(rng, 40, 0);
  CHECK(additive2_spanner(tree).graph.edge_count() == 39);

  const Graph k25 = complete_graph(25);
  const Spanner h = additive2_spanner(k25);
  CHECK(static_cast<double>(h.graph.edge_count()) <= 8 * 125 * std::log(25.0));
  CHECK(matrix_max(apsp_relaxation(h.graph)) <= 3);
}

TEST_CASE("property: spanner distances exceed graph distances by at most 2") {
  testing_support::Rng rng(54);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<Vertex>(uniform(rng, 2, 60));
    const Graph g = random_connected(rng, n, uniform(rng, 0, n * n / 3));
    const Spanner h = additive2_spanner(g);
    const Matrix dg = apsp_relaxation(g);
    const Matrix dh = apsp_relaxation(h.graph);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        REQUIRE(dh[u][v] >= dg[u][v]);
        REQUIRE(dh[u][v] <= dg[u][v] + 2);
      }
    }
    const double cap = 8 * std::pow(n, 1.5) * std::log(std::max<double>(n, 2));
    REQUIRE(static_cast<double>(h.graph.edge_count()) <= cap);
  }
}

TEST_CASE("dense diameter examples") {
  const DenseDiameter p = diam_dense_32(path_graph(10), 0);
  CHECK(p.value >= 5);
  CHECK(p.value <= 9);
  const DenseDiameter k = diam_dense_32(complete_graph(7), 0);
  CHECK(k.value <= 1);
  CHECK_THROWS_AS(diam_dense_32(Graph(3, false, {{0, 1, 1}}), 0), PreconditionError);
}

TEST_CASE("dense eccentricity examples") {
  const DenseEccentricities p = ecc_dense_53(path_graph(11), 0);
  CHECK(p.estimate.values[0] >= 5);
  CHECK(p.estimate.values[0] <= 10);
  for (Dist e : ecc_dense_53(complete_graph(6), 0).estimate.values) CHECK(e <= 1);
}

TEST_CASE("property: dense estimators meet their (floored) bounds and every term stays below the truth") {
  testing_support::Rng rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<Vertex>(uniform(rng, 1, 100));
    const Graph g = random_connected(rng, n, uniform(rng, 0, 2 * n));
    const auto ecc = exact_eccentricities(g);
    const Dist D = *std::max_element(ecc.begin(), ecc.end());
    const Dist h = D / 3;
    const Dist z = D % 3;
    const DenseDiameter dd = diam_dense_32(g, trial);
    REQUIRE(dd.value <= D);
    REQUIRE(static_cast<std::int64_t>(dd.value) >= static_cast<std::int64_t>(2 * h) - (z == 2 ? 0 : 1));

    const DenseEccentricities de = ecc_dense_53(g, trial);
    for (Vertex u = 0; u < n; ++u) {
      const auto e = static_cast<std::int64_t>(ecc[u]);
      REQUIRE(de.eps1[u] <= e);
      REQUIRE(de.eps2[u] <= e);
      REQUIRE(de.eps3[u] <= e);
      REQUIRE(de.estimate.values[u] <= ecc[u]);
      // 3e/5 - 1 only holds up to rounding: e = 2 with u in A gives 0. The
      // case split is sound once 3e/5 is floored.
      REQUIRE(static_cast<std::int64_t>(de.estimate.values[u]) >= 3 * e / 5 - 1);
    }
  }
}

TEST_CASE("spanner composition") {
  const Graph p8 = path_graph(8);
  const auto exact = approx_on_spanner(p8, [](const Graph& h, std::uint64_t) { return exact_eccentricities(h); }, 0);
  CHECK(*std::max_element(exact.begin(), exact.end()) == 5);

  testing_support::Rng rng(56);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<Vertex>(uniform(rng, 2, 60));
    const Graph g = random_connected(rng, n, uniform(rng, 0, n * n / 4));
    const Dist D = exact_diameter(g);
    const auto S = random_subset(rng, n, 6);
    const auto T = random_subset(rng, n, 6);
    const Dist Dst = exact_st_diameter(g, S, T);
    const auto st = approx_on_spanner(
        g, [&](const Graph& h, std::uint64_t) { return std::vector<Dist>{st_3approx(h, S, T).value}; }, trial);
    REQUIRE(st[0] <= Dst);
    REQUIRE(3 * (st[0] + 2) >= Dst);
    const auto folk = approx_on_spanner(
        g, [](const Graph& h, std::uint64_t) { return std::vector<Dist>{diam_folklore_2approx(h).value}; }, trial);
    REQUIRE(folk[0] <= D);
    REQUIRE(2 * (folk[0] + 2) >= D);
  }
}
