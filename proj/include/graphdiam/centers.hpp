#pragma once

#include <cstdint>
#include <vector>

#include "graphdiam/graph.hpp"
#include "graphdiam/random.hpp"

namespace graphdiam {

struct BunchEntry {
  Vertex vertex;
  Dist dist;      // d(owner, vertex)
  Vertex parent;  // previous vertex on a shortest owner-vertex path, inside the bunch
};

struct ClusterEntry {
  Vertex member;  // v with the cluster owner in B_A(v)
  Dist dist;      // d(member, owner)
};

/// Centers A with pivots, bunches B_A(v) = {u : d(v,u) < d(v,A)} and
/// clusters C_A(w) = {v : w in B_A(v)}.
struct CenterData {
  Ratio p;
  std::size_t neighborhood_size = 0;  // ceil(1/p), capped at n
  std::vector<Vertex> A;              // ascending
  std::vector<char> in_A;
  std::vector<Vertex> pivot;        // p_A(v), smallest id among the nearest
  std::vector<Dist> dist_to_A;      // d(v, A)
  std::vector<Vertex> pivot_parent; // next vertex from v toward its pivot
  std::vector<std::vector<BunchEntry>> bunches;     // by (dist, id)
  std::vector<std::vector<ClusterEntry>> clusters;  // by member id
  std::size_t initial_A_size = 0;  // greedy hitting set size
  std::size_t iterations = 0;      // sampling rounds after the hitting set
};

/// Greedy hitting set of the sets (largest remaining coverage first, smallest
/// id on ties). Every set must be nonempty; the result is ascending.
std::vector<Vertex> greedy_hitting_set(Vertex n, const std::vector<std::vector<Vertex>>& sets);

/// Centers with |B_A(v)| <= ceil(1/p) for every v and |C_A(w)| <= 4/p for every
/// w. Undirected unit-weight graphs, 0 < p <= 1.
CenterData compute_centers(const Graph& g, Ratio p, std::uint64_t seed);

}  // namespace graphdiam
