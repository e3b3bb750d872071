#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "graphdiam/centers.hpp"
#include "graphdiam/ecc_approx.hpp"
#include "graphdiam/graph.hpp"

namespace graphdiam {

/// Dense n x n matrix of 32-bit distance estimates (n up to ~20k fits in memory).
class EstimateMatrix {
public:
  static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

  explicit EstimateMatrix(Vertex n) : n_(n), cells_(static_cast<std::size_t>(n) * n, kUnset) {}
  Vertex size() const noexcept { return n_; }
  std::uint32_t& at(Vertex u, Vertex v) { return cells_[static_cast<std::size_t>(u) * n_ + v]; }
  std::uint32_t at(Vertex u, Vertex v) const { return cells_[static_cast<std::size_t>(u) * n_ + v]; }

private:
  Vertex n_;
  std::vector<std::uint32_t> cells_;
};

/// For every w and every pair u != v in C_A(w): M(u,v) = min(M, d(u,w)+d(v,w)).
/// Untouched off-diagonal cells stay kUnset; the diagonal is 0.
EstimateMatrix cluster_pair_estimates(const CenterData& c);

/// Fills every kUnset cell with max(0, d(u,A)+d(v,A)-1).
void fill_from_pivots(EstimateMatrix& m, const CenterData& c);

struct DenseDiameter {
  Dist value = 0;  // max(D1, D2 - 2), at least 0
  Dist d1 = 0;     // largest matrix entry
  Dist d2 = 0;     // largest spanner eccentricity over A
  CenterData centers;
  std::size_t spanner_edges = 0;
};

/// Centers with p = 1/ceil(sqrt(n)), the pair matrix and spanner
/// eccentricities of the centers. For D = 3h+z the value is at least 2h-1
/// (z in {0,1}) or 2h (z = 2), and at most D. Undirected connected unit-weight graphs.
DenseDiameter diam_dense_32(const Graph& g, std::uint64_t seed);

struct DenseEccentricities {
  EccEstimate estimate;
  // per vertex, signed because the spanner-based terms may go negative
  std::vector<std::int64_t> eps1, eps2, eps3;
  CenterData centers;
  std::size_t spanner_edges = 0;  // after adding the bunch and pivot trees
};

/// eps'(u) = max(eps1, eps2, eps3, 0) with 3 eps(u)/5 - 1 <= eps'(u) <= eps(u).
DenseEccentricities ecc_dense_53(const Graph& g, std::uint64_t seed);

/// Any per-vertex (or single-value) estimator run on a spanner of g.
using SpannerInner = std::function<std::vector<Dist>(const Graph&, std::uint64_t)>;

/// Runs `inner` on the additive spanner of g and subtracts 2 from each value
/// (clamped at 0; kUnreachable is passed through).
std::vector<Dist> approx_on_spanner(const Graph& g, const SpannerInner& inner, std::uint64_t seed);

}  // namespace graphdiam
