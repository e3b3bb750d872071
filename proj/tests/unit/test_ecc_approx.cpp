#include <doctest.h>

#include <cmath>

#include "graphdiam/ecc_approx.hpp"
#include "graphdiam/exact.hpp"
#include "graphdiam/random.hpp"
#include "oracles.hpp"

using namespace graphdiam;
using namespace testing_support;

namespace {

Rational rational(Ratio r) {
  return Rational(static_cast<long long>(r.num), static_cast<long long>(r.den));
}

}  // namespace

TEST_CASE("sample sizes and ratios") {
  CHECK(ceil_sqrt(0) == 0);
  CHECK(ceil_sqrt(16) == 4);
  CHECK(ceil_sqrt(17) == 5);
  CHECK(sqrt_log_sample_size(1) == 1);
  CHECK(sqrt_log_sample_size(100) == 93);  // ceil(2 * 10 * ln 100)
  CHECK(sqrt_log_sample_size(4) == 4);     // capped at n
  CHECK(log_sample_size(100) == 10);       // ceil(2 ln 100) = ceil(9.21)
  const Ratio r = parse_ratio("6/8");
  CHECK(r.num == 3);
  CHECK(r.den == 4);
  CHECK_THROWS_AS(parse_ratio("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratio("x"), std::invalid_argument);
}

TEST_CASE("rng samples are sorted, distinct and reproducible") {
  graphdiam::Rng a(5), b(5);
  const auto s = a.sample(50, 20);
  CHECK(s == b.sample(50, 20));
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
  CHECK(a.sample(7, 7) == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("2-approximation on a directed cycle and a single vertex") {
  const Graph c8 = cycle_graph(8, true);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (Dist e : ecc_2approx(c8, seed).values) {
      CHECK(e >= 4);
      CHECK(e <= 7);
    }
  }
  CHECK(ecc_2approx(Graph(1, true, {}), 0).values == std::vector<Dist>{0});
}

TEST_CASE("2-approximation flags unreachable pairs") {
  const EccEstimate e = ecc_2approx(Graph(3, true, {{0, 1, 1}, {1, 2, 1}}), 0);
  CHECK(e.has_unreachable);
}

TEST_CASE("property: 2-approximation is one-sided and within factor 2 when the sample hits") {
  testing_support::Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<Vertex>(uniform(rng, 2, 60));
    const Graph g = random_strongly_connected(rng, n, n, trial % 2 ? Weights::kUnit : Weights::kOneToTen);
    const auto ecc = exact_eccentricities(g);
    const EccEstimate est = ecc_2approx(g, trial);
    const bool hit = hits_every_in_neighborhood(g, est.sample, ceil_sqrt(n));
    for (Vertex v = 0; v < n; ++v) {
      REQUIRE(est.values[v] <= ecc[v]);
      if (hit) REQUIRE(2 * est.values[v] >= ecc[v]);
    }
  }
}

TEST_CASE("property: 2-approximation is deterministic per seed") {
  testing_support::Rng rng(22);
  const Graph g = random_strongly_connected(rng, 50, 60);
  CHECK(ecc_2approx(g, 9).values == ecc_2approx(g, 9).values);
  CHECK(ecc_2approx(g, 9).sample == ecc_2approx(g, 9).sample);
}

TEST_CASE("(2+delta) estimate on a directed cycle and a complete digraph") {
  const Graph c6 = cycle_graph(6, true);
  const DeltaEstimate e = ecc_2plusdelta(c6, {1, 4}, 0);
  for (Vertex v = 0; v < 6; ++v) {
    CHECK(e.exact[v] * 8 >= Rational(3 * 5));  // (1 - 1/4)/2 * 5
    CHECK(e.estimate.values[v] <= 5);
  }
  const DeltaEstimate k4 = ecc_2plusdelta(complete_graph(4, true), {1, 2}, 3);
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(k4.exact[v] * 4 >= 1);
    CHECK(k4.estimate.values[v] <= 1);
  }
}

TEST_CASE("(2+delta) estimate rejects bad input") {
  CHECK_THROWS_AS(ecc_2plusdelta(path_graph(3, true), {1, 4}, 0), PreconditionError);
  CHECK_THROWS_AS(ecc_2plusdelta(cycle_graph(3, true), {0, 4}, 0), PreconditionError);
  CHECK_THROWS_AS(ecc_2plusdelta(cycle_graph(3, true), {4, 4}, 0), PreconditionError);
}

TEST_CASE("property: (2+delta) phases shrink, assignments come from thresholds, D bounds the active set") {
  testing_support::Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<Vertex>(uniform(rng, 2, 60));
    const Graph g = random_strongly_connected(rng, n, 2 * n, trial % 2 ? Weights::kUnit : Weights::kOneToTen);
    const Ratio tau = trial % 3 == 0 ? Ratio{1, 8} : trial % 3 == 1 ? Ratio{1, 4} : Ratio{1, 2};
    const auto ecc = exact_eccentricities(g);
    const DeltaEstimate est = ecc_2plusdelta(g, tau, trial, true);
    const Rational keep = 1 - rational(tau);

    const double max_d = static_cast<double>(n - 1) * static_cast<double>(g.max_weight());
    const double bound = std::log2(n) + (max_d >= 1 ? std::log(max_d) / -std::log(1 - double(tau.num) / tau.den) : 0) + 1;
    REQUIRE(static_cast<double>(est.phases.size()) <= bound + 1e-9);

    bool all_hit = true;
    for (std::size_t p = 0; p < est.phases.size(); ++p) {
      const DeltaPhase& ph = est.phases[p];
      all_hit = all_hit && ph.sample_hit;
      if (p + 1 < est.phases.size()) {
        const DeltaPhase& next = est.phases[p + 1];
        const bool halved = next.active <= (ph.active + 1) / 2;
        const bool decayed = next.D == ph.D * keep;
        REQUIRE((halved || decayed));
      }
      if (all_hit) {
        for (Vertex v : ph.members) REQUIRE(Rational(ecc[v]) <= ph.D);
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      REQUIRE(est.estimate.values[v] <= ecc[v]);
      bool from_phase = est.exact[v] == Rational(ecc[v]) || est.exact[v] == 0;
      for (const DeltaPhase& ph : est.phases) from_phase = from_phase || est.exact[v] == keep * ph.D / 2;
      REQUIRE(from_phase);
    }
  }
}

TEST_CASE("folklore 3-approximation") {
  CHECK(ecc_folklore_3approx(path_graph(3)).values == std::vector<Dist>{2, 1, 2});
  const auto star = ecc_folklore_3approx(star_graph(5)).values;
  CHECK(star[0] == 1);
  for (Vertex v = 1; v <= 5; ++v) CHECK(star[v] == 1);
  CHECK_THROWS_AS(ecc_folklore_3approx(cycle_graph(4, true)), PreconditionError);
  CHECK_THROWS_AS(ecc_folklore_3approx(Graph(3, false, {{0, 1, 1}})), PreconditionError);
}

TEST_CASE("property: folklore estimate on random trees is within factor 3") {
  testing_support::Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<Vertex>(uniform(rng, 1, 200));
    const Graph g = random_connected(rng, n, 0, trial % 2 ? Weights::kUnit : Weights::kOneToTen);
    const auto ecc = exact_eccentricities(g);
    const auto est = ecc_folklore_3approx(g).values;
    for (Vertex v = 0; v < n; ++v) {
      REQUIRE(est[v] <= ecc[v]);
      REQUIRE(3 * est[v] >= ecc[v]);
    }
  }
}

TEST_CASE("source radius") {
  const RadiusEstimate c = source_radius(cycle_graph(7, true), RadiusMethod::kTwoApprox, 0);
  CHECK(c.value == 6);
  const RadiusEstimate s = source_radius(star_graph(6), RadiusMethod::kTwoApprox, 0);
  CHECK(s.value >= 1);
  CHECK(s.value <= 2);
  const RadiusEstimate d = source_radius(cycle_graph(7, true), RadiusMethod::kTwoPlusDelta, 0, {1, 4});
  CHECK(d.value == 6);
}

TEST_CASE("property: source radius lies in [R, 2R]") {
  testing_support::Rng rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<Vertex>(uniform(rng, 2, 50));
    const Graph g = random_strongly_connected(rng, n, n);
    const RadiusResult exact = exact_radius(g);
    const RadiusEstimate est = source_radius(g, RadiusMethod::kTwoApprox, trial);
    REQUIRE(est.value == exact_eccentricities(g)[est.center]);
    REQUIRE(est.value >= exact.value);
    if (hits_every_in_neighborhood(g, est.estimate.sample, ceil_sqrt(n))) REQUIRE(est.value <= 2 * exact.value);
  }
}
