#include "graphdiam/dense.hpp"

#include <algorithm>

#include "graphdiam/shortest_paths.hpp"
#include "graphdiam/spanner.hpp"

namespace graphdiam {

namespace {

void require_dense_input(const Graph& g, const char* what) {
  if (g.directed()) throw PreconditionError(std::string(what) + " needs an undirected graph");
  if (!g.unit_weights() && g.edge_count() > 0) {
    throw PreconditionError(std::string(what) + " needs unit weights");
  }
  if (!strongly_connected(g)) throw PreconditionError(std::string(what) + " needs a connected graph");
  if (g.vertex_count() >= EstimateMatrix::kUnset) throw PreconditionError("graph too large for the matrix");
}

Dist eccentricity(const DistanceArray& d) { return *std::max_element(d.dist.begin(), d.dist.end()); }

Ratio dense_probability(Vertex n) { return {1, std::max<std::uint64_t>(1, ceil_sqrt(n))}; }

EstimateMatrix pair_matrix(const CenterData& c) {
  EstimateMatrix m = cluster_pair_estimates(c);
  fill_from_pivots(m, c);
  return m;
}

}  // namespace

EstimateMatrix cluster_pair_estimates(const CenterData& c) {
  const auto n = static_cast<Vertex>(c.bunches.size());
  EstimateMatrix m(n);
  for (Vertex u = 0; u < n; ++u) m.at(u, u) = 0;
  for (const auto& cluster : c.clusters) {
    for (const ClusterEntry& a : cluster) {
      for (const ClusterEntry& b : cluster) {
        if (a.member == b.member) continue;
        const auto via = static_cast<std::uint32_t>(a.dist + b.dist);
        std::uint32_t& cell = m.at(a.member, b.member);
        cell = std::min(cell, via);
      }
    }
  }
  return m;
}

void fill_from_pivots(EstimateMatrix& m, const CenterData& c) {
  const Vertex n = m.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      std::uint32_t& cell = m.at(u, v);
      if (cell != EstimateMatrix::kUnset) continue;
      const Dist sum = c.dist_to_A[u] + c.dist_to_A[v];
      cell = static_cast<std::uint32_t>(sum == 0 ? 0 : sum - 1);
    }
  }
}

DenseDiameter diam_dense_32(const Graph& g, std::uint64_t seed) {
  require_dense_input(g, "the dense diameter estimate");
  DenseDiameter out;
  const Vertex n = g.vertex_count();
  if (n == 0) return out;
  out.centers = compute_centers(g, dense_probability(n), seed);

  const EstimateMatrix m = pair_matrix(out.centers);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) out.d1 = std::max<Dist>(out.d1, m.at(u, v));
  }

  const Spanner h = additive2_spanner(g);
  out.spanner_edges = h.graph.edge_count();
  for (Vertex a : out.centers.A) out.d2 = std::max(out.d2, eccentricity(sssp(h.graph, a)));
  out.value = std::max(out.d1, out.d2 >= 2 ? out.d2 - 2 : 0);
  return out;
}

DenseEccentricities ecc_dense_53(const Graph& g, std::uint64_t seed) {
  require_dense_input(g, "the dense eccentricity estimate");
  DenseEccentricities out;
  out.estimate.method = "ecc-dense";
  out.estimate.seed = seed;
  const Vertex n = g.vertex_count();
  if (n == 0) return out;
  out.centers = compute_centers(g, dense_probability(n), seed);
  const CenterData& c = out.centers;
  const EstimateMatrix m = pair_matrix(c);

  // shortest-path tree edges spanning B_A(u) and the path to p_A(u)
  std::vector<Edge> trees;
  for (Vertex u = 0; u < n; ++u) {
    for (const BunchEntry& e : c.bunches[u]) {
      if (e.vertex != u) trees.push_back({e.parent, e.vertex, 1});
    }
    for (Vertex v = u; v != c.pivot[u]; v = c.pivot_parent[v]) {
      trees.push_back({v, c.pivot_parent[v], 1});
    }
  }
  const Graph h = merge_edges(n, additive2_spanner(g).graph.edges(), trees);
  out.spanner_edges = h.edge_count();

  std::vector<Dist> ecc_h(n, 0);
  std::vector<Dist> far_center(n, 0);  // max over x in A of d_H(u,x)
  for (Vertex a : c.A) {
    const DistanceArray d = sssp(h, a);
    ecc_h[a] = eccentricity(d);
    for (Vertex u = 0; u < n; ++u) far_center[u] = std::max(far_center[u], d[u]);
  }

  out.eps1.resize(n);
  out.eps2.resize(n);
  out.eps3.resize(n);
  out.estimate.values.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    std::uint32_t row = 0;
    for (Vertex v = 0; v < n; ++v) row = std::max(row, m.at(u, v));
    out.eps1[u] = row;
    out.eps2[u] = static_cast<std::int64_t>(ecc_h[c.pivot[u]]) -
                  static_cast<std::int64_t>(c.dist_to_A[u]) - 2;
    out.eps3[u] = static_cast<std::int64_t>(far_center[u]) - 2;
    const std::int64_t best = std::max({out.eps1[u], out.eps2[u], out.eps3[u], std::int64_t{0}});
    out.estimate.values[u] = static_cast<Dist>(best);
  }
  return out;
}

std::vector<Dist> approx_on_spanner(const Graph& g, const SpannerInner& inner, std::uint64_t seed) {
  const Spanner h = additive2_spanner(g);
  std::vector<Dist> values = inner(h.graph, seed);
  for (Dist& v : values) {
    if (v != kUnreachable) v = v >= 2 ? v - 2 : 0;
  }
  return values;
}

}  // namespace graphdiam
