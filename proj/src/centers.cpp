#include "graphdiam/centers.hpp"

#include <algorithm>
#include <queue>

#include "graphdiam/shortest_paths.hpp"

namespace graphdiam {

std::vector<Vertex> greedy_hitting_set(Vertex n, const std::vector<std::vector<Vertex>>& sets) {
  std::vector<std::vector<std::size_t>> containing(n);
  std::vector<std::size_t> count(n, 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw PreconditionError("hitting set of an empty set");
    for (Vertex x : sets[i]) {
      containing[x].push_back(i);
      ++count[x];
    }
  }

  // max coverage first, then smallest id
  auto worse = [](const std::pair<std::size_t, Vertex>& a, const std::pair<std::size_t, Vertex>& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<std::pair<std::size_t, Vertex>, std::vector<std::pair<std::size_t, Vertex>>,
                      decltype(worse)>
      heap(worse);
  for (Vertex x = 0; x < n; ++x) {
    if (count[x] > 0) heap.push({count[x], x});
  }

  std::vector<char> hit(sets.size(), 0);
  std::vector<Vertex> chosen;
  while (!heap.empty()) {
    const auto [c, x] = heap.top();
    heap.pop();
    if (c != count[x]) {
      if (count[x] > 0) heap.push({count[x], x});
      continue;
    }
    if (c == 0) break;
    chosen.push_back(x);
    for (std::size_t i : containing[x]) {
      if (hit[i]) continue;
      hit[i] = 1;
      for (Vertex y : sets[i]) --count[y];
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

void assign_bunches(const Graph& g, const std::vector<std::vector<BunchEntry>>& initial,
                    CenterData& c) {
  const Vertex n = g.vertex_count();
  const NearestSource ns = nearest_source(g, c.A);
  c.pivot = ns.source;
  c.dist_to_A = ns.dist;
  c.pivot_parent = ns.parent;
  c.bunches.assign(n, {});
  c.clusters.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    for (const BunchEntry& e : initial[v]) {
      if (e.dist < c.dist_to_A[v]) c.bunches[v].push_back(e);
    }
    for (const BunchEntry& e : c.bunches[v]) c.clusters[e.vertex].push_back({v, e.dist});
  }
}

}  // namespace

CenterData compute_centers(const Graph& g, Ratio p, std::uint64_t seed) {
  if (g.directed()) throw PreconditionError("centers need an undirected graph");
  if (!g.unit_weights() && g.edge_count() > 0) throw PreconditionError("centers need unit weights");
  if (p.num == 0 || p.num > p.den) throw PreconditionError("sampling probability must lie in (0,1]");
  CenterData c;
  c.p = p;
  const Vertex n = g.vertex_count();
  if (n == 0) return c;
  c.neighborhood_size = std::min<std::uint64_t>(n, (p.den + p.num - 1) / p.num);

  std::vector<std::vector<Vertex>> nbhd(n);
  std::vector<std::vector<BunchEntry>> initial(n);
  {
    NeighborhoodSearch search(g);
    for (Vertex v = 0; v < n; ++v) {
      const Neighborhood nb = search.closest(v, c.neighborhood_size);
      for (const NeighborhoodEntry& e : nb.entries) {
        nbhd[v].push_back(e.vertex);
        initial[v].push_back({e.vertex, e.dist, e.parent});
      }
    }
  }
  c.A = greedy_hitting_set(n, nbhd);
  if (c.A.empty()) c.A.push_back(0);
  c.initial_A_size = c.A.size();
  c.in_A.assign(n, 0);
  for (Vertex a : c.A) c.in_A[a] = 1;

  // bunches only shrink as A grows, so every round prunes the first ones
  Rng rng(seed);
  for (;;) {
    assign_bunches(g, initial, c);
    std::vector<Vertex> W;
    for (Vertex w = 0; w < n; ++w) {
      if (c.clusters[w].size() * p.num > 4 * p.den) W.push_back(w);
    }
    if (W.empty()) break;
    ++c.iterations;
    for (Vertex w : W) {
      if (rng.bernoulli(p) && !c.in_A[w]) {
        c.in_A[w] = 1;
        c.A.push_back(w);
      }
    }
    std::sort(c.A.begin(), c.A.end());
  }
  return c;
}

}  // namespace graphdiam
