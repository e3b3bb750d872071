#include <doctest.h>

#include <set>

#include "graphdiam/constructions.hpp"
#include "graphdiam/exact.hpp"
#include "graphdiam/shortest_paths.hpp"
#include "oracles.hpp"

using namespace graphdiam;
using namespace testing_support;

namespace {

std::vector<Vertex> members(const LabeledSet& s) {
  std::vector<Vertex> out;
  for (Vertex v = s.begin; v < s.end; ++v) out.push_back(v);
  return out;
}

bool all_pass(const ConstructionOutput& c) {
  for (const BoundCheck& b : verify_construction(c.graph, c.meta)) {
    if (!b.pass) return false;
  }
  return true;
}

OVInstance manual(int k, int n, int d, const std::vector<std::vector<std::vector<int>>>& vectors) {
  OVInstance inst = OVInstance::zeros(k, n, d);
  for (int s = 0; s < k; ++s) {
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < d; ++c) inst.set_bit(s, i, c, vectors[s][i][c] != 0);
    }
  }
  return inst;
}

}  // namespace

TEST_CASE("OV generation and brute force") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(!ov_brute_force(gen_ov(3, 4, 5, OVMode::kUnsat, seed)));
    const OVInstance p = gen_ov(3, 4, 5, OVMode::kPlanted, seed);
    REQUIRE(p.planted);
    CHECK(is_orthogonal(p, *p.planted));
    CHECK(ov_brute_force(p));
  }
  const OVInstance two = manual(2, 1, 2, {{{1, 0}}, {{0, 1}}});
  CHECK(ov_brute_force(two) == std::vector<int>{0, 0});
  const OVInstance ones = manual(2, 2, 2, {{{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}});
  CHECK(!ov_brute_force(ones));
  const OVInstance zero = manual(3, 1, 3, {{{0, 0, 0}}, {{0, 0, 0}}, {{0, 0, 0}}});
  CHECK(ov_brute_force(zero) == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(gen_ov(3, 2, 1, OVMode::kUnsat, 0), PreconditionError);
  CHECK_THROWS_AS(parse_ov_mode("maybe"), std::invalid_argument);
}

TEST_CASE("property: brute force agrees with search by coordinate filtering") {
  testing_support::Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = static_cast<int>(uniform(rng, 2, 4));
    const int n = static_cast<int>(uniform(rng, 1, 4));
    const int d = static_cast<int>(uniform(rng, 2, 6));
    OVInstance inst = OVInstance::zeros(k, n, d);
    std::bernoulli_distribution coin(0.7);
    for (auto& b : inst.bits) b = coin(rng);
    REQUIRE(ov_brute_force(inst) == ov_by_filtering(inst));
  }
}

TEST_CASE("layered graph: sizes, layering and pruning") {
  for (int k = 2; k <= 4; ++k) {
    const OVInstance inst = gen_ov(k, 2, 3, OVMode::kUnsat, 7);
    const LayeredGraph lg = build_layered_graph(inst);
    const Vertex side = static_cast<Vertex>(std::pow(2, k - 1));
    CHECK(lg.layer_offsets[1] - lg.layer_offsets[0] == side);
    CHECK(lg.layer_offsets[k + 1] - lg.layer_offsets[k] == side);
    const Graph g(lg.vertex_count, false, lg.edges);
    for (Vertex v = 0; v < lg.vertex_count; ++v) {
      const int layer = lg.labels[v].layer;
      bool left = false, right = false;
      for (const Arc& a : g.out_arcs(v)) {
        const int other = lg.labels[a.head].layer;
        REQUIRE(std::abs(other - layer) == 1);
        left = left || other == layer - 1;
        right = right || other == layer + 1;
      }
      if (layer > 0 && layer < k) REQUIRE((left && right));
    }
    // the S and T ids round-trip through the labels
    for (Vertex v = lg.layer_offsets[0]; v < lg.layer_offsets[1]; ++v) {
      const auto& vec = lg.labels[v].vectors;
      REQUIRE(lg.s_id(std::vector<int>(vec.begin(), vec.end() - 1)) == v);
    }
    for (Vertex v = lg.layer_offsets[k]; v < lg.layer_offsets[k + 1]; ++v) {
      const auto& vec = lg.labels[v].vectors;
      REQUIRE(lg.t_id(std::vector<int>(vec.begin() + 1, vec.end())) == v);
    }
  }
}

TEST_CASE("layered graph: unsat distances, planted witness, partial agreement") {
  const ConstructionOutput unsat = build_kov_layered(gen_ov(3, 3, 4, OVMode::kUnsat, 1));
  const auto S = members(unsat.meta.set("S"));
  const auto T = members(unsat.meta.set("T"));
  for (Vertex s : S) {
    const auto d = sssp(unsat.graph, s);
    for (Vertex t : T) REQUIRE(d[t] == 3);
  }

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const OVInstance inst = gen_ov(3, 3, 4, OVMode::kPlanted, seed);
    const ConstructionOutput c = build_kov_layered(inst);
    REQUIRE(c.meta.witness);
    CHECK(sssp(c.graph, c.meta.witness->first)[c.meta.witness->second] >= 7);

    // k = 3 means t = 1; with s = 1 one vector differs, distance >= 3t - 2s + 4 = 5
    const LayeredGraph lg = build_layered_graph(inst);
    const auto& a = *inst.planted;
    for (int b = 0; b < inst.n; ++b) {
      const Vertex alpha = lg.s_id({a[0], b});
      REQUIRE(sssp(c.graph, alpha)[lg.t_id({a[1], a[2]})] >= 5);
      const Vertex beta = lg.t_id({b, a[2]});
      REQUIRE(sssp(c.graph, lg.s_id({a[0], a[1]}))[beta] >= 5);
    }
  }
}

TEST_CASE("property: layered graph is bipartite by layers and L1 reaches matching L_{k-1} in k-2 steps") {
  testing_support::Rng rng(62);
  for (int trial = 0; trial < 12; ++trial) {
    const int k = static_cast<int>(uniform(rng, 2, 4));
    const OVInstance inst = gen_ov(k, 2, 3, trial % 2 ? OVMode::kPlanted : OVMode::kUnsat, trial);
    const LayeredGraph lg = build_layered_graph(inst);
    const Graph g(lg.vertex_count, false, lg.edges);
    for (Vertex s = lg.layer_offsets[0]; s < lg.layer_offsets[1]; ++s) {
      const auto d = sssp(g, s);
      for (Vertex t = lg.layer_offsets[k]; t < lg.layer_offsets[k + 1]; ++t) {
        if (d[t] != kUnreachable) REQUIRE(d[t] % 2 == static_cast<Dist>(k % 2));
      }
    }
    if (k < 3) continue;
    for (Vertex u = lg.layer_offsets[1]; u < lg.layer_offsets[2]; ++u) {
      const auto d = sssp(g, u);
      for (Vertex v = lg.layer_offsets[k - 1]; v < lg.layer_offsets[k]; ++v) {
        if (lg.labels[u].coords == lg.labels[v].coords) REQUIRE(d[v] == static_cast<Dist>(k - 2));
      }
    }
  }
}

TEST_CASE("5 vs 8 construction") {
  const ConstructionOutput u = build_diam_5v8(gen_ov(3, 3, 4, OVMode::kUnsat, 2));
  CHECK(exact_diameter(u.graph) <= 5);
  CHECK(u.meta.promised_low == 5);
  CHECK(u.meta.promised_high == 8);
  const ConstructionOutput p = build_diam_5v8(gen_ov(3, 3, 4, OVMode::kPlanted, 2));
  CHECK(sssp(p.graph, p.meta.witness->first)[p.meta.witness->second] >= 8);
  // vertex count: 2n^2 layered ends plus 2n^2 copies and 2n clique vertices, internal layers <= 2 n d^2
  const Vertex n = 3, d = 4;
  CHECK(u.graph.vertex_count() <= 4 * n * n + 2 * n + 2 * n * d * d);
  CHECK(u.meta.set("S'").size() == n * n);
  CHECK(u.meta.set("S''").size() == n);
  CHECK_THROWS_AS(build_diam_5v8(gen_ov(4, 2, 3, OVMode::kUnsat, 0)), PreconditionError);
}

TEST_CASE("6 vs 10 construction weights") {
  const ConstructionOutput u = build_diam_6v10(gen_ov(3, 3, 4, OVMode::kUnsat, 3));
  CHECK(exact_diameter(u.graph) <= 6);
  const ConstructionOutput p = build_diam_6v10(gen_ov(3, 3, 4, OVMode::kPlanted, 3));
  CHECK(sssp(p.graph, p.meta.witness->first)[p.meta.witness->second] >= 10);
  const LabeledSet& L1 = u.meta.set("L1");
  const LabeledSet& L2 = u.meta.set("L2");
  const LabeledSet& Spp = u.meta.set("S''");
  const LabeledSet& Tpp = u.meta.set("T''");
  for (const Edge& e : u.graph.edges()) {
    const bool middle = (L1.contains(e.from) && L2.contains(e.to)) || (L2.contains(e.from) && L1.contains(e.to));
    const bool clique = (Spp.contains(e.from) && Spp.contains(e.to)) || (Tpp.contains(e.from) && Tpp.contains(e.to));
    REQUIRE(e.weight == ((middle || clique) ? 2u : 1u));
  }
}

TEST_CASE("3k-4 vs 5k-7 construction at k = 3 and 4") {
  const ConstructionOutput u3 = build_diam_3km4(gen_ov(3, 3, 4, OVMode::kUnsat, 4));
  CHECK(exact_diameter(u3.graph) <= 5);
  const ConstructionOutput p3 = build_diam_3km4(gen_ov(3, 3, 4, OVMode::kPlanted, 4));
  CHECK(sssp(p3.graph, p3.meta.witness->first)[p3.meta.witness->second] >= 8);
  const ConstructionOutput u4 = build_diam_3km4(gen_ov(4, 2, 3, OVMode::kUnsat, 4));
  CHECK(exact_diameter(u4.graph) <= 8);
  const ConstructionOutput p4 = build_diam_3km4(gen_ov(4, 2, 3, OVMode::kPlanted, 4));
  CHECK(sssp(p4.graph, p4.meta.witness->first)[p4.meta.witness->second] >= 13);
  CHECK(u4.meta.set("S'''").size() > 0);
  CHECK_THROWS_AS(build_diam_3km4(gen_ov(2, 2, 3, OVMode::kUnsat, 0)), PreconditionError);
}

TEST_CASE("8 vs 13 construction and arc directions") {
  const ConstructionOutput u = build_diam_8v13(gen_ov(4, 2, 3, OVMode::kUnsat, 5));
  CHECK(exact_diameter(u.graph) <= 8);
  const ConstructionOutput p = build_diam_8v13(gen_ov(4, 2, 3, OVMode::kPlanted, 5));
  CHECK(sssp(p.graph, p.meta.witness->first)[p.meta.witness->second] >= 13);
  CHECK(u.meta.promised_low == 8);
  CHECK(u.meta.promised_high == 13);

  std::set<std::pair<Vertex, Vertex>> arcs;
  for (const Edge& e : u.graph.edges()) arcs.insert({e.from, e.to});
  const LabeledSet& Sp = u.meta.set("S'");
  const LabeledSet& Spp = u.meta.set("S''");
  const LabeledSet& Tp = u.meta.set("T'");
  const LabeledSet& Tpp = u.meta.set("T''");
  std::size_t forward = 0;
  for (const auto& [a, b] : arcs) {
    if (Spp.contains(a) && Sp.contains(b)) {
      ++forward;
      REQUIRE(!arcs.count({b, a}));
    }
    REQUIRE(!(Sp.contains(a) && Spp.contains(b)));
    if (Tp.contains(a) && Tpp.contains(b)) REQUIRE(!arcs.count({b, a}));
    REQUIRE(!(Tpp.contains(a) && Tp.contains(b)));
  }
  CHECK(forward == Sp.size());
  CHECK_THROWS_AS(build_diam_8v13(gen_ov(3, 2, 3, OVMode::kUnsat, 0)), PreconditionError);
}

TEST_CASE("undirected eccentricity construction") {
  const ConstructionOutput u = build_ecc_lb_undirected(gen_ov(3, 3, 4, OVMode::kUnsat, 6));
  const auto S = members(u.meta.set("S"));
  const Vertex y = u.meta.set("Y").begin;
  const auto from_y = sssp(u.graph, y);
  for (Vertex s : S) {
    const auto d = sssp(u.graph, s).dist;
    CHECK(*std::max_element(d.begin(), d.end()) <= 5);
    CHECK(from_y[s] == 2);
  }
  const ConstructionOutput p = build_ecc_lb_undirected(gen_ov(3, 3, 4, OVMode::kPlanted, 6));
  CHECK(sssp(p.graph, p.meta.witness->first)[p.meta.witness->second] >= 9);
  // k = 2 attaches each s directly to the hub
  const ConstructionOutput two = build_ecc_lb_undirected(gen_ov(2, 3, 4, OVMode::kUnsat, 6));
  CHECK(two.meta.set("S_paths").size() == 0);
  CHECK(all_pass(two));
}

TEST_CASE("directed eccentricity construction") {
  const OVInstance no = gen_ov(2, 3, 4, OVMode::kUnsat, 7);
  const ConstructionOutput u = build_ecc_lb_directed(no, 2);
  for (Vertex v : members(u.meta.set("U"))) {
    const auto d = sssp(u.graph, v).dist;
    CHECK(*std::max_element(d.begin(), d.end()) == 4);
  }
  // u0 = (1,0,0) is orthogonal to v0 = (0,1,0); u1 shares coordinate 1 with v0
  const OVInstance one = [] {
    OVInstance inst = manual(2, 2, 3, {{{1, 0, 0}, {1, 1, 0}}, {{0, 1, 0}, {1, 0, 1}}});
    inst.planted = std::vector<int>{0, 0};
    return inst;
  }();
  for (std::uint64_t L : {1u, 2u}) {
    const ConstructionOutput p = build_ecc_lb_directed(one, L);
    const auto d = sssp(p.graph, 0).dist;
    CHECK(*std::max_element(d.begin(), d.end()) >= 2 * L + 3);
    CHECK(sssp(p.graph, p.meta.witness->first)[p.meta.witness->second] == 2 * L + 3);
  }
  // a coordinate no U vector has is dropped
  CHECK(build_ecc_lb_directed(one, 1).meta.set("C").size() == 2);
  CHECK_THROWS_AS(build_ecc_lb_directed(no, 0), PreconditionError);
}

TEST_CASE("size guard rejects oversized constructions") {
  const OVInstance big = gen_ov(4, 30, 8, OVMode::kUnsat, 0);
  CHECK_THROWS_AS(build_kov_layered(big), SizeGuardError);
  CHECK_THROWS_AS(build_diam_8v13(big), SizeGuardError);
  ConstructionLimits tight;
  tight.max_edges = 10;
  CHECK_THROWS_AS(build_diam_5v8(gen_ov(3, 3, 4, OVMode::kUnsat, 0), tight), SizeGuardError);
}

TEST_CASE("metadata round trip and verification") {
  const ConstructionOutput c = build_diam_5v8(gen_ov(3, 2, 3, OVMode::kPlanted, 8));
  const nlohmann::json j = nlohmann::json::parse(metadata_to_json(c.meta).dump());
  const ConstructionMeta back = metadata_from_json(j);
  CHECK(back.construction == "5v8");
  CHECK(back.witness == c.meta.witness);
  CHECK(back.sets.size() == c.meta.sets.size());
  CHECK(all_pass(c));

  ConstructionMeta tampered = c.meta;
  tampered.promised_high = 99;
  CHECK(!all_pass({c.graph, tampered}));

  ConstructionMeta wrong = c.meta;
  wrong.vertices += 1;
  CHECK_THROWS_AS(verify_construction(c.graph, wrong), MetadataError);
  nlohmann::json missing = j;
  missing.erase("scope");
  CHECK_THROWS_AS(metadata_from_json(missing), MetadataError);
}

TEST_CASE("property: every construction verifies in both modes") {
  struct Case {
    const char* name;
    int k, n, d;
    std::uint64_t L;
  };
  const Case cases[] = {{"kov", 2, 3, 3, 1},   {"kov", 4, 2, 3, 1},     {"5v8", 3, 2, 4, 1},
                        {"6v10", 3, 2, 4, 1},  {"3km4", 3, 2, 3, 1},    {"8v13", 4, 2, 3, 1},
                        {"ecc-und", 2, 3, 3, 1}, {"ecc-und", 3, 2, 3, 1}, {"ecc-dir", 2, 4, 4, 1}};
  for (const Case& c : cases) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      for (OVMode mode : {OVMode::kUnsat, OVMode::kPlanted}) {
        CAPTURE(c.name);
        CAPTURE(seed);
        REQUIRE(all_pass(build_construction(c.name, gen_ov(c.k, c.n, c.d, mode, seed), c.L)));
      }
    }
  }
}
