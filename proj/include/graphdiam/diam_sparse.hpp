#pragma once

#include <cstddef>

#include "graphdiam/graph.hpp"

namespace graphdiam {

struct DiameterEstimate {
  std::string method;
  Dist value = 0;  // kUnreachable when some pair is not mutually reachable
  bool unreachable = false;
  Vertex center = 0;                   // vertex whose searches were used
  std::size_t vertices_searched = 0;   // in+out eccentricity pairs computed
};

/// max(eps_out(0), eps_in(0)): D/2 <= value <= D.
DiameterEstimate diam_folklore_2approx(const Graph& g);

/// Eccentricities of a minimum-degree vertex and all its in/out neighbors.
/// For D = 2h: h+1 <= value <= D. Always value <= D.
DiameterEstimate diam_linear_lessthan2(const Graph& g);

}  // namespace graphdiam
