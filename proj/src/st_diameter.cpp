#include "graphdiam/st_diameter.hpp"

#include <algorithm>
#include <cmath>

#include "graphdiam/blowup.hpp"
#include "graphdiam/random.hpp"
#include "graphdiam/shortest_paths.hpp"

namespace graphdiam {

namespace {

std::vector<Vertex> normalize(const Graph& g, std::span<const Vertex> set, const char* name) {
  if (set.empty()) throw PreconditionError(std::string("vertex set ") + name + " is empty");
  std::vector<Vertex> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.back() >= g.vertex_count()) {
    throw PreconditionError(std::string("vertex set ") + name + " has id " +
                            std::to_string(out.back()) + " out of range");
  }
  return out;
}

void require_undirected(const Graph& g, const char* what) {
  if (g.directed()) throw PreconditionError(std::string(what) + " needs an undirected graph");
}

// member of `set` (ascending) with the smallest d, smallest id on ties
Vertex closest_in(const std::vector<Vertex>& set, const DistanceArray& d) {
  Vertex best = set.front();
  for (Vertex v : set) {
    if (d[v] < d[best]) best = v;
  }
  return best;
}

Vertex farthest_in(const std::vector<Vertex>& set, const std::vector<Dist>& d) {
  Vertex best = set.front();
  for (Vertex v : set) {
    if (d[v] > d[best]) best = v;
  }
  return best;
}

struct Best {
  Dist value = 0;
  Vertex s = 0, t = 0;
  bool set = false;
  void offer(Dist v, Vertex s_, Vertex t_) {
    if (!set || v > value) {
      value = v;
      s = s_;
      t = t_;
      set = true;
    }
  }
};

struct CoreResult {
  Best best;
  std::vector<Vertex> sample;
  bool sample_hit = false;
};

// One pass of the sampling algorithm on h. Z holds the z_size closest
// vertices to the far T-vertex; with `widen`, Y also takes every vertex one
// nonzero-weight edge away from Z.
CoreResult two_approx_core(const Graph& h, const std::vector<Vertex>& S,
                           const std::vector<Vertex>& T, Rng& rng, std::size_t sample_size,
                           std::size_t z_size, bool widen) {
  const Vertex N = h.vertex_count();
  CoreResult out;
  out.sample = rng.sample(N, sample_size);

  std::vector<Dist> from_x(N, kUnreachable);
  for (Vertex x : out.sample) {
    const DistanceArray dx = sssp(h, x);
    for (Vertex v = 0; v < N; ++v) from_x[v] = std::min(from_x[v], dx[v]);
    const Vertex tx = closest_in(T, dx);
    const DistanceArray dt = sssp(h, tx);
    const Vertex s = farthest_in(S, dt.dist);
    out.best.offer(dt[s], s, tx);
  }

  const Vertex tbar = farthest_in(T, from_x);
  const DistanceArray dtbar = sssp(h, tbar);
  const Vertex s_far = farthest_in(S, dtbar.dist);
  out.best.offer(dtbar[s_far], s_far, tbar);

  const Neighborhood Z = k_closest(h, tbar, z_size);
  std::vector<char> in_y(N, 0);
  std::vector<Vertex> Y;
  for (const NeighborhoodEntry& e : Z.entries) {
    if (!in_y[e.vertex]) {
      in_y[e.vertex] = 1;
      Y.push_back(e.vertex);
    }
  }
  std::vector<char> in_x(N, 0);
  for (Vertex x : out.sample) in_x[x] = 1;
  out.sample_hit = std::any_of(Y.begin(), Y.end(), [&](Vertex v) { return in_x[v]; });
  if (widen) {
    for (const NeighborhoodEntry& e : Z.entries) {
      for (const Arc& a : h.out_arcs(e.vertex)) {
        if (a.weight > 0 && !in_y[a.head]) {
          in_y[a.head] = 1;
          Y.push_back(a.head);
        }
      }
    }
  }

  for (Vertex y : Y) {
    const Vertex sy = closest_in(S, sssp(h, y));
    const DistanceArray ds = sssp(h, sy);
    const Vertex t = farthest_in(T, ds.dist);
    out.best.offer(ds[t], sy, t);
  }
  return out;
}

StEstimate finish(const char* method, std::uint64_t seed, CoreResult&& core) {
  StEstimate out;
  out.method = method;
  out.seed = seed;
  out.value = core.best.value;
  out.s = core.best.s;
  out.t = core.best.t;
  out.sample = std::move(core.sample);
  out.sample_hit = core.sample_hit;
  return out;
}

// Sample large enough to meet every k-vertex neighborhood among N vertices w.h.p.
std::size_t hitting_sample_size(std::size_t N, std::size_t k) {
  if (N <= 1) return N;
  const double v = std::ceil(2.0 * static_cast<double>(N) / static_cast<double>(k) *
                             std::log(static_cast<double>(N)));
  return std::clamp<std::size_t>(static_cast<std::size_t>(v), 1, N);
}

StEstimate blown_up(const char* method, const Graph& g, const std::vector<Vertex>& S,
                    const std::vector<Vertex>& T, std::uint64_t seed) {
  const Blowup b = degree3_blowup(g);
  const Vertex N = b.graph.vertex_count();
  std::vector<Vertex> original(N, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) original[b.map.representative[v]] = v;
  auto lift = [&](const std::vector<Vertex>& set) {
    std::vector<Vertex> out;
    for (Vertex v : set) out.push_back(b.map.representative[v]);
    return out;
  };
  // representatives are increasing in the original id, so order is kept
  const std::vector<Vertex> bS = lift(S);
  const std::vector<Vertex> bT = lift(T);
  const std::size_t z = std::min<std::size_t>(N, std::max<std::uint64_t>(1, ceil_sqrt(g.edge_count())));
  Rng rng(seed);
  StEstimate out = finish(method, seed,
                          two_approx_core(b.graph, bS, bT, rng, hitting_sample_size(N, z), z, true));
  out.s = original[out.s];
  out.t = original[out.t];
  return out;
}

}  // namespace

StEstimate st_3approx(const Graph& g, std::span<const Vertex> S_in, std::span<const Vertex> T_in) {
  const std::vector<Vertex> S = normalize(g, S_in, "S");
  const std::vector<Vertex> T = normalize(g, T_in, "T");
  const Vertex s = S.front();
  const Vertex t = T.front();
  const DistanceArray from_s = sssp(g, s, Direction::kOut);
  const DistanceArray to_t = sssp(g, t, Direction::kIn);
  Best best;
  const Vertex t_far = farthest_in(T, from_s.dist);
  best.offer(from_s[t_far], s, t_far);
  const Vertex s_far = farthest_in(S, to_t.dist);
  best.offer(to_t[s_far], s_far, t);

  StEstimate out;
  out.method = "st3";
  out.value = best.value;
  out.s = best.s;
  out.t = best.t;
  return out;
}

StEstimate st_2approx_sqrt(const Graph& g, std::span<const Vertex> S_in,
                           std::span<const Vertex> T_in, std::uint64_t seed) {
  require_undirected(g, "the S-T 2-approximation");
  if (!g.unit_weights() && g.edge_count() > 0) {
    throw PreconditionError("the unweighted S-T 2-approximation needs unit weights");
  }
  const std::vector<Vertex> S = normalize(g, S_in, "S");
  const std::vector<Vertex> T = normalize(g, T_in, "T");
  const Vertex n = g.vertex_count();
  Rng rng(seed);
  return finish("st2", seed,
                two_approx_core(g, S, T, rng, sqrt_log_sample_size(n), ceil_sqrt(n), false));
}

StEstimate st_2approx_true(const Graph& g, std::span<const Vertex> S_in,
                           std::span<const Vertex> T_in, std::uint64_t seed) {
  require_undirected(g, "the S-T 2-approximation");
  if (!g.unit_weights() && g.edge_count() > 0) {
    throw PreconditionError("the unweighted S-T 2-approximation needs unit weights");
  }
  return blown_up("st2true", g, normalize(g, S_in, "S"), normalize(g, T_in, "T"), seed);
}

StEstimate st_2approx_weighted(const Graph& g, std::span<const Vertex> S_in,
                               std::span<const Vertex> T_in, std::uint64_t seed, bool true_mode) {
  require_undirected(g, "the S-T 2-approximation");
  const std::vector<Vertex> S = normalize(g, S_in, "S");
  const std::vector<Vertex> T = normalize(g, T_in, "T");
  if (true_mode) return blown_up("st2true-weighted", g, S, T, seed);
  const Vertex n = g.vertex_count();
  Rng rng(seed);
  return finish("st2-weighted", seed,
                two_approx_core(g, S, T, rng, sqrt_log_sample_size(n), ceil_sqrt(n), false));
}

namespace {

// g plus one pendant vertex of weight W on every member of each set
Graph with_pendants(const std::vector<Edge>& base, Vertex n,
                    std::initializer_list<const std::vector<Vertex>*> sets, Dist W,
                    std::vector<std::vector<Vertex>>& pendant_ids, std::size_t extra_vertices = 0,
                    std::vector<Edge> extra_edges = {}) {
  GraphBuilder b(n, false);
  for (const Edge& e : base) b.add_edge(e.from, e.to, e.weight);
  pendant_ids.clear();
  for (const auto* set : sets) {
    auto& ids = pendant_ids.emplace_back();
    for (Vertex v : *set) {
      const Vertex p = b.add_vertex();
      ids.push_back(p);
      b.add_edge(p, v, W);
    }
  }
  for (std::size_t i = 0; i < extra_vertices; ++i) b.add_vertex();
  for (const Edge& e : extra_edges) b.add_edge(e.from, e.to, e.weight);
  return std::move(b).build();
}

Dist minus_2w(Dist diam, Dist W) {
  if (diam == kUnreachable) throw PreconditionError("the S-T reduction needs a connected graph");
  return diam >= 2 * W ? diam - 2 * W : 0;
}

}  // namespace

EquivalenceGadget build_equivalence_gadget(const Graph& g, std::span<const Vertex> S_in,
                                           std::span<const Vertex> T_in, const DiameterFn& diameter) {
  require_undirected(g, "the S-T reduction");
  EquivalenceGadget q;
  q.S = normalize(g, S_in, "S");
  q.T = normalize(g, T_in, "T");
  const Vertex n = g.vertex_count();
  if (!strongly_connected(g)) throw PreconditionError("the S-T reduction needs a connected graph");

  // Doubling on any odd weight (not only an odd maximum) makes every
  // distance even, which is what keeps D_S/2 integral.
  std::vector<Edge> base = g.edges();
  q.doubled = std::any_of(base.begin(), base.end(), [](const Edge& e) { return e.weight % 2 != 0; });
  if (q.doubled) {
    for (Edge& e : base) e.weight *= 2;
  }
  q.max_weight = q.doubled ? 2 * g.max_weight() : g.max_weight();
  if (q.max_weight == 0) q.max_weight = 2;
  q.W = q.max_weight * n;

  std::vector<std::vector<Vertex>> ids;
  Graph gs = with_pendants(base, n, {&q.S}, q.W, ids);
  Graph gt = with_pendants(base, n, {&q.T}, q.W, ids);
  // a single pendant never gets to 2W, so the clamp yields 0 as intended
  q.d_s = minus_2w(diameter(gs), q.W);
  q.d_t = minus_2w(diameter(gt), q.W);
  if (q.d_t > q.d_s) {
    std::swap(q.S, q.T);
    std::swap(q.d_s, q.d_t);
    std::swap(gs, gt);
    q.swapped = true;
  }
  q.g_s = std::move(gs);
  q.g_t = std::move(gt);

  q.g_st = with_pendants(base, n, {&q.S, &q.T}, q.W, ids);
  q.s_prime = ids[0];
  q.t_prime = ids[1];
  q.d_union = minus_2w(diameter(q.g_st), q.W);

  q.x = static_cast<Vertex>(n + q.S.size() + q.T.size());
  q.y = q.x + 1;
  std::vector<Edge> hub{{q.x, q.y, 2 * q.W}};
  for (Vertex v : q.s_prime) hub.push_back({q.x, v, q.d_s / 2});
  for (Vertex u : q.t_prime) hub.push_back({q.y, u, q.d_s / 2});
  q.g_prime = with_pendants(base, n, {&q.S, &q.T}, q.W, ids, 2, std::move(hub));
  return q;
}

Dist st_via_diameter(const Graph& g, std::span<const Vertex> S, std::span<const Vertex> T,
                     const DiameterFn& diameter) {
  const EquivalenceGadget q = build_equivalence_gadget(g, S, T, diameter);
  const Dist scaled = q.d_union > q.d_s ? q.d_union : minus_2w(diameter(q.g_prime), q.W);
  return q.doubled ? scaled / 2 : scaled;
}

}  // namespace graphdiam
