#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphdiam/graph.hpp"
#include "graphdiam/random.hpp"

namespace graphdiam {

using Rational = boost::multiprecision::cpp_rational;

/// Per-vertex eccentricity estimates. Every value is a realized distance or
/// an exact eccentricity, so values[v] <= true eccentricity of v.
struct EccEstimate {
  std::string method;
  std::uint64_t seed = 0;
  std::vector<Dist> values;
  /// some value is kUnreachable (input not strongly connected)
  bool has_unreachable = false;
  /// random vertices drawn by the method, ascending (empty for deterministic methods)
  std::vector<Vertex> sample;
};

/// Out-eccentricity estimates with eps/2 <= eps' <= eps whenever the sample
/// hits every in-neighborhood of size ceil(sqrt(n)).
EccEstimate ecc_2approx(const Graph& g, std::uint64_t seed);

/// True when `sample` meets the s closest in-neighbors of every vertex.
bool hits_every_in_neighborhood(const Graph& g, std::span<const Vertex> sample, std::size_t s);

struct DeltaPhase {
  Rational D;              // bound at the start of the phase
  std::size_t active = 0;  // |S| at the start of the phase
  bool far_case = false;   // all of S outside S_w is at distance >= (1-tau)D/2 from w
  bool sample_hit = true;  // A meets S_w
  std::size_t assigned = 0;
  std::vector<Vertex> members;  // S itself; filled only when requested
};

struct DeltaEstimate {
  EccEstimate estimate;         // floored values
  std::vector<Rational> exact;  // unfloored values
  std::vector<DeltaPhase> phases;
};

/// Once the active set is this small the remaining eccentricities are computed exactly.
inline constexpr std::size_t kTerminalActiveSize = 4;

/// (1-tau)/2 * eps <= eps' <= eps for strongly connected graphs with integer
/// weights, when every phase's sample meets S_w. tau must lie in (0,1).
/// Throws PreconditionError when g is not strongly connected.
DeltaEstimate ecc_2plusdelta(const Graph& g, Ratio tau, std::uint64_t seed,
                             bool record_members = false);

/// eps'(v) = max(d(0,v), eps(0) - d(0,v)); eps/3 <= eps' <= eps.
/// Undirected connected graphs only.
EccEstimate ecc_folklore_3approx(const Graph& g);

enum class RadiusMethod { kTwoApprox, kTwoPlusDelta };

struct RadiusEstimate {
  Vertex center = 0;
  Dist value = 0;  // exact eccentricity of `center`
  EccEstimate estimate;
};

/// Vertex minimizing the estimate (smallest id on ties) and its exact
/// out-eccentricity. `tau` is used by kTwoPlusDelta only.
RadiusEstimate source_radius(const Graph& g, RadiusMethod method, std::uint64_t seed,
                             Ratio tau = {1, 4});

}  // namespace graphdiam
