#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "graphdiam/graph.hpp"

namespace graphdiam {

/// An S-T diameter estimate together with a pair (s, t) realizing it, so
/// value == d(s, t) <= D_{S,T} always.
struct StEstimate {
  std::string method;
  std::uint64_t seed = 0;
  Dist value = 0;
  Vertex s = 0;
  Vertex t = 0;
  /// random sample X (in the searched graph's ids; empty for deterministic methods)
  std::vector<Vertex> sample;
  /// X meets the neighborhood of the farthest T-vertex that the analysis relies on
  bool sample_hit = true;
};

/// Two searches from min(S) and min(T): D/3 <= value <= D.
StEstimate st_3approx(const Graph& g, std::span<const Vertex> S, std::span<const Vertex> T);

/// Sampling algorithm on an undirected unit-weight graph: 2*floor(D/4) <= value <= D.
StEstimate st_2approx_sqrt(const Graph& g, std::span<const Vertex> S, std::span<const Vertex> T,
                           std::uint64_t seed);

/// Same algorithm on the degree-3 blow-up with the neighborhood of the far
/// vertex widened by one weight-1 step: D/2 <= value <= D. Unit weights.
StEstimate st_2approx_true(const Graph& g, std::span<const Vertex> S, std::span<const Vertex> T,
                           std::uint64_t seed);

/// Undirected nonnegative weights. With true_mode the guarantee is
/// D/2 <= value <= D; without it only value <= D is promised.
StEstimate st_2approx_weighted(const Graph& g, std::span<const Vertex> S,
                               std::span<const Vertex> T, std::uint64_t seed, bool true_mode);

using DiameterFn = std::function<Dist(const Graph&)>;

/// Reduction graphs that recover the S-T diameter from three or four
/// diameter computations. All distances are in the (possibly doubled)
/// weight scale; `doubled` says whether weights were multiplied by 2.
struct EquivalenceGadget {
  bool doubled = false;
  bool swapped = false;   // S and T exchanged so that d_s >= d_t
  Weight max_weight = 0;  // effective even M after doubling
  Dist W = 0;             // M * n
  std::vector<Vertex> S, T;  // deduplicated, after the swap
  Graph g_s, g_t, g_st, g_prime;
  std::vector<Vertex> s_prime, t_prime;  // pendant ids, valid in g_st and g_prime
  Vertex x = 0, y = 0;                   // hub ids in g_prime
  Dist d_s = 0, d_t = 0;  // max distance within S and within T
  Dist d_union = 0;       // max distance within S union T
};

/// Builds every reduction graph and runs `diameter` on g_s, g_t and g_st.
/// Undirected connected graphs only.
EquivalenceGadget build_equivalence_gadget(const Graph& g, std::span<const Vertex> S,
                                           std::span<const Vertex> T, const DiameterFn& diameter);

/// Exact S-T diameter through the gadget and the injected diameter routine.
Dist st_via_diameter(const Graph& g, std::span<const Vertex> S, std::span<const Vertex> T,
                     const DiameterFn& diameter);

}  // namespace graphdiam
