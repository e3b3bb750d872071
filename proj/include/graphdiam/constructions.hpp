#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "graphdiam/graph.hpp"
#include "graphdiam/ov.hpp"

namespace graphdiam {

/// Half-open id range [begin, end) naming one vertex set of a construction.
struct LabeledSet {
  std::string name;
  Vertex begin = 0;
  Vertex end = 0;

  Vertex size() const noexcept { return end - begin; }
  bool contains(Vertex v) const noexcept { return v >= begin && v < end; }
};

/// Which distances the promised gap talks about.
enum class Scope {
  kStAllEqual,   // every S x T distance equals promised_low
  kAllPairs,     // diameter <= promised_low
  kEccMax,       // max over S of the eccentricity <= promised_low
  kEccOutEqual,  // every out-eccentricity over U equals promised_low
};

const char* to_string(Scope scope);
/// Throws std::invalid_argument on an unknown name.
Scope parse_scope(const std::string& text);

/// Everything about a construction except its graph; mirrors the sidecar file.
struct ConstructionMeta {
  std::string construction;
  int k = 0;
  int n = 0;
  int d = 0;
  std::uint64_t L = 0;  // ecc-dir only
  std::string mode;     // "unsat" or "planted"
  std::vector<LabeledSet> sets;
  Dist promised_low = 0;
  Dist promised_high = 0;
  std::optional<std::pair<Vertex, Vertex>> witness;
  Scope scope = Scope::kAllPairs;
  Vertex vertices = 0;
  std::size_t edges = 0;

  /// Throws std::out_of_range when absent.
  const LabeledSet& set(std::string_view name) const;
};

struct ConstructionOutput {
  Graph graph;
  ConstructionMeta meta;
};

struct ConstructionLimits {
  std::uint64_t max_edges = 2'000'000;
};

/// (low, high) for a construction name at the given k and L.
/// Throws PreconditionError on an unknown name.
std::pair<Dist, Dist> promised_gap(const std::string& construction, int k, std::uint64_t L);

/// Vertex of the layered graph: the vector chosen from each set (-1 where
/// the layer has no slot for it) and the coordinate tuple (empty on S and T).
struct LayeredVertex {
  int layer = 0;
  std::vector<int> vectors;
  std::vector<int> coords;
};

/// Undirected k+1 layer graph with S = layer 0 and T = layer k. Internal
/// vertices without a neighbor on both sides are removed until none is left.
struct LayeredGraph {
  int k = 0;
  int n = 0;
  Vertex vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Vertex> layer_offsets;  // k+2 entries; layer j is [off[j], off[j+1])
  std::vector<LayeredVertex> labels;

  /// Id of (a_0..a_{k-2}) in S.
  Vertex s_id(const std::vector<int>& tuple) const;
  /// Id of (b_1..b_{k-1}) in T.
  Vertex t_id(const std::vector<int>& tuple) const;
};

LayeredGraph build_layered_graph(const OVInstance& inst, const ConstructionLimits& limits = {});

/// S-T gap k vs 3k-2. Requires k >= 2.
ConstructionOutput build_kov_layered(const OVInstance& inst, const ConstructionLimits& limits = {});
/// Undirected unweighted, diameter 5 vs 8. Requires k = 3.
ConstructionOutput build_diam_5v8(const OVInstance& inst, const ConstructionLimits& limits = {});
/// As 5v8 with weight 2 on L1-L2 and clique edges; 6 vs 10. Requires k = 3.
ConstructionOutput build_diam_6v10(const OVInstance& inst, const ConstructionLimits& limits = {});
/// Directed unweighted, diameter 3k-4 vs 5k-7. Requires k >= 3.
ConstructionOutput build_diam_3km4(const OVInstance& inst, const ConstructionLimits& limits = {});
/// The k = 4 case of the above, 8 vs 13.
ConstructionOutput build_diam_8v13(const OVInstance& inst, const ConstructionLimits& limits = {});
/// Undirected, eccentricities of S at most 2k-1 vs one at least 4k-3. Requires k >= 2.
ConstructionOutput build_ecc_lb_undirected(const OVInstance& inst,
                                           const ConstructionLimits& limits = {});
/// Directed, out-eccentricities of U equal to L+2 vs one at least 2L+3.
/// Uses the two sets of a k = 2 instance as U and V. Requires L >= 1.
ConstructionOutput build_ecc_lb_directed(const OVInstance& inst, std::uint64_t L,
                                         const ConstructionLimits& limits = {});

/// Dispatch by construction name (kov, 5v8, 6v10, 3km4, 8v13, ecc-und, ecc-dir).
ConstructionOutput build_construction(const std::string& name, const OVInstance& inst,
                                      std::uint64_t L = 1, const ConstructionLimits& limits = {});

/// The metadata file contents do not fit the graph or are malformed.
class MetadataError : public GraphError {
public:
  using GraphError::GraphError;
};

nlohmann::ordered_json metadata_to_json(const ConstructionMeta& meta);
/// Throws MetadataError.
ConstructionMeta metadata_from_json(const nlohmann::json& j);

struct BoundCheck {
  std::string description;
  bool pass = false;
};

/// Recomputes the promised bound for the metadata's scope with exact
/// distances. Throws MetadataError when ids or sizes do not fit the graph.
std::vector<BoundCheck> verify_construction(const Graph& g, const ConstructionMeta& meta);

}  // namespace graphdiam
