#include "graphdiam/shortest_paths.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <tuple>
#include <utility>

namespace graphdiam {

namespace {

using HeapItem = std::pair<Dist, Vertex>;
using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>>;

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
}

void bfs(const Graph& g, Direction dir, std::vector<Dist>& dist, std::vector<Vertex> frontier) {
  std::size_t head = 0;
  while (head < frontier.size()) {
    const Vertex u = frontier[head++];
    for (const Arc& a : g.arcs(u, dir)) {
      if (dist[a.head] == kUnreachable) {
        dist[a.head] = dist[u] + 1;
        frontier.push_back(a.head);
      }
    }
  }
}

void zero_one(const Graph& g, Direction dir, std::vector<Dist>& dist,
              const std::vector<Vertex>& sources) {
  std::deque<Vertex> dq(sources.begin(), sources.end());
  std::vector<char> done(g.vertex_count(), 0);
  while (!dq.empty()) {
    const Vertex u = dq.front();
    dq.pop_front();
    if (done[u]) continue;
    done[u] = 1;
    for (const Arc& a : g.arcs(u, dir)) {
      const Dist nd = dist[u] + a.weight;
      if (nd < dist[a.head]) {
        dist[a.head] = nd;
        if (a.weight == 0) {
          dq.push_front(a.head);
        } else {
          dq.push_back(a.head);
        }
      }
    }
  }
}

void dijkstra(const Graph& g, Direction dir, std::vector<Dist>& dist,
              const std::vector<Vertex>& sources) {
  MinHeap heap;
  for (Vertex s : sources) heap.push({0, s});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    for (const Arc& a : g.arcs(u, dir)) {
      const Dist nd = d + a.weight;
      if (nd < dist[a.head]) {
        dist[a.head] = nd;
        heap.push({nd, a.head});
      }
    }
  }
}

DistanceArray run(const Graph& g, std::vector<Vertex> sources, Direction dir) {
  DistanceArray out;
  out.direction = dir;
  out.dist.assign(g.vertex_count(), kUnreachable);
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  for (Vertex s : sources) {
    check_vertex(g, s);
    out.dist[s] = 0;
  }
  switch (g.weight_class()) {
    case WeightClass::kUnit: bfs(g, dir, out.dist, sources); break;
    case WeightClass::kZeroOne: zero_one(g, dir, out.dist, sources); break;
    case WeightClass::kGeneral: dijkstra(g, dir, out.dist, sources); break;
  }
  out.sources = std::move(sources);
  return out;
}

}  // namespace

DistanceArray sssp(const Graph& g, Vertex source, Direction dir) {
  return run(g, {source}, dir);
}

DistanceArray multi_source_distance(const Graph& g, std::span<const Vertex> sources,
                                    Direction dir) {
  if (sources.empty()) throw PreconditionError("multi-source search needs at least one source");
  return run(g, std::vector<Vertex>(sources.begin(), sources.end()), dir);
}

NearestSource nearest_source(const Graph& g, std::span<const Vertex> sources, Direction dir) {
  if (sources.empty()) throw PreconditionError("nearest-source search needs at least one source");
  const Vertex n = g.vertex_count();
  NearestSource out;
  out.dist.assign(n, kUnreachable);
  out.source.assign(n, 0);
  out.parent.assign(n, 0);

  // labels (dist, source) compared lexicographically; adding an arc weight
  // keeps the order, so a plain label-setting search stays correct
  using Label = std::tuple<Dist, Vertex, Vertex>;
  std::priority_queue<Label, std::vector<Label>, std::greater<>> heap;
  for (Vertex s : sources) {
    check_vertex(g, s);
    if (out.dist[s] != 0 || s < out.source[s]) {
      out.dist[s] = 0;
      out.source[s] = s;
      out.parent[s] = s;
    }
  }
  for (Vertex s : sources) {
    if (out.source[s] == s) heap.push({0, s, s});
  }
  while (!heap.empty()) {
    const auto [d, src, u] = heap.top();
    heap.pop();
    if (d != out.dist[u] || src != out.source[u]) continue;
    for (const Arc& a : g.arcs(u, dir)) {
      const Dist nd = d + a.weight;
      Dist& cur = out.dist[a.head];
      if (nd < cur || (nd == cur && src < out.source[a.head])) {
        cur = nd;
        out.source[a.head] = src;
        out.parent[a.head] = u;
        heap.push({nd, src, a.head});
      }
    }
  }
  return out;
}

NeighborhoodSearch::NeighborhoodSearch(const Graph& g)
    : g_(g),
      dist_(g.vertex_count(), kUnreachable),
      parent_(g.vertex_count(), 0),
      settled_(g.vertex_count(), 0) {}

Neighborhood NeighborhoodSearch::closest(Vertex v, std::size_t s, Direction dir) {
  check_vertex(g_, v);
  Neighborhood out;
  out.owner = v;
  out.direction = dir;
  if (s == 0) return out;

  MinHeap heap;
  dist_[v] = 0;
  parent_[v] = v;
  touched_.push_back(v);
  heap.push({0, v});
  std::vector<Vertex> settled;
  Dist last = 0;
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    // Zero-weight arcs can reveal an equal-distance vertex with a smaller id
    // after a larger one was settled, so keep going through the whole
    // distance level of the s-th vertex and sort afterwards.
    if (settled.size() >= s && d > last) break;
    heap.pop();
    if (settled_[u] || d != dist_[u]) continue;
    settled_[u] = 1;
    settled.push_back(u);
    last = d;
    for (const Arc& a : g_.arcs(u, dir)) {
      const Dist nd = d + a.weight;
      if (nd < dist_[a.head]) {
        if (dist_[a.head] == kUnreachable) touched_.push_back(a.head);
        dist_[a.head] = nd;
        parent_[a.head] = u;
        heap.push({nd, a.head});
      }
    }
  }

  std::sort(settled.begin(), settled.end(), [&](Vertex a, Vertex b) {
    return std::pair(dist_[a], a) < std::pair(dist_[b], b);
  });
  if (settled.size() > s) settled.resize(s);
  out.entries.reserve(settled.size());
  for (Vertex u : settled) out.entries.push_back({u, dist_[u], parent_[u]});

  for (Vertex u : touched_) {
    dist_[u] = kUnreachable;
    settled_[u] = 0;
  }
  touched_.clear();
  return out;
}

Neighborhood k_closest(const Graph& g, Vertex v, std::size_t s, Direction dir) {
  NeighborhoodSearch search(g);
  return search.closest(v, s, dir);
}

}  // namespace graphdiam
