#pragma once

#include <span>
#include <vector>

#include "graphdiam/graph.hpp"

namespace graphdiam {

/// Distances from a source (or source set) along `direction`. With
/// Direction::kIn, dist[v] is the distance from v *to* the source.
struct DistanceArray {
  std::vector<Dist> dist;
  std::vector<Vertex> sources;
  Direction direction = Direction::kOut;

  Dist operator[](Vertex v) const { return dist[v]; }
  std::size_t size() const noexcept { return dist.size(); }
};

/// Exact single-source shortest paths. BFS for unit weights, a deque search
/// for 0/1 weights, a binary heap otherwise.
DistanceArray sssp(const Graph& g, Vertex source, Direction dir = Direction::kOut);

/// dist[v] = min over sources of the distance. Throws PreconditionError on an
/// empty source set.
DistanceArray multi_source_distance(const Graph& g, std::span<const Vertex> sources,
                                    Direction dir = Direction::kOut);

/// Distance to the nearest source together with that source; ties go to the
/// smaller source id.
struct NearestSource {
  std::vector<Dist> dist;
  std::vector<Vertex> source;  // meaningless where dist == kUnreachable
  /// next vertex on a shortest path toward `source`; a source is its own parent
  std::vector<Vertex> parent;
};

NearestSource nearest_source(const Graph& g, std::span<const Vertex> sources,
                             Direction dir = Direction::kOut);

struct NeighborhoodEntry {
  Vertex vertex;
  Dist dist;
  /// Predecessor on a shortest path from the owner; the owner is its own parent.
  Vertex parent;
};

/// The s closest vertices to `owner` ordered by (distance, id). Shorter than s
/// only when fewer vertices are reachable.
struct Neighborhood {
  Vertex owner = 0;
  Direction direction = Direction::kOut;
  std::vector<NeighborhoodEntry> entries;
};

/// Truncated Dijkstra over a reusable workspace, so repeated queries cost
/// time proportional to the explored region rather than to n.
class NeighborhoodSearch {
public:
  explicit NeighborhoodSearch(const Graph& g);
  Neighborhood closest(Vertex v, std::size_t s, Direction dir = Direction::kOut);

private:
  const Graph& g_;
  std::vector<Dist> dist_;
  std::vector<Vertex> parent_;
  std::vector<char> settled_;
  std::vector<Vertex> touched_;
};

Neighborhood k_closest(const Graph& g, Vertex v, std::size_t s, Direction dir = Direction::kOut);

}  // namespace graphdiam
