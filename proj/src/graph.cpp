#include "graphdiam/graph.hpp"

#include <algorithm>

#include "graphdiam/shortest_paths.hpp"

namespace graphdiam {

namespace {

void fill_csr(Vertex n, const std::vector<std::pair<Vertex, Arc>>& arcs,
              std::vector<std::size_t>& offsets, std::vector<Arc>& out) {
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [tail, arc] : arcs) ++offsets[tail + 1];
  for (Vertex v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  out.resize(arcs.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [tail, arc] : arcs) out[cursor[tail]++] = arc;
}

}  // namespace

Graph::Graph(Vertex vertex_count, bool directed, std::vector<Edge> edges)
    : n_(vertex_count), directed_(directed), edges_(std::move(edges)) {
  bool all_unit = true;
  bool all_zero_one = true;
  for (const Edge& e : edges_) {
    if (e.from >= n_ || e.to >= n_) {
      throw PreconditionError("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                              ") has an endpoint outside [0," + std::to_string(n_) + ")");
    }
    max_weight_ = std::max(max_weight_, e.weight);
    all_unit = all_unit && e.weight == 1;
    all_zero_one = all_zero_one && e.weight <= 1;
  }
  weight_class_ = all_unit       ? WeightClass::kUnit
                  : all_zero_one ? WeightClass::kZeroOne
                                 : WeightClass::kGeneral;

  // every finite distance plus one must stay representable
  if (n_ > 1 && max_weight_ > (kUnreachable - 1) / (n_ - 1)) {
    throw PreconditionError("edge weight " + std::to_string(max_weight_) +
                            " exceeds the overflow cap for " + std::to_string(n_) + " vertices");
  }

  std::vector<std::pair<Vertex, Arc>> forward;
  std::vector<std::pair<Vertex, Arc>> backward;
  forward.reserve(edges_.size() * (directed_ ? 1 : 2));
  backward.reserve(forward.capacity());
  for (const Edge& e : edges_) {
    forward.push_back({e.from, {e.to, e.weight}});
    backward.push_back({e.to, {e.from, e.weight}});
    if (!directed_) {
      forward.push_back({e.to, {e.from, e.weight}});
      backward.push_back({e.from, {e.to, e.weight}});
    }
  }
  fill_csr(n_, forward, out_offsets_, out_arcs_);
  fill_csr(n_, backward, in_offsets_, in_arcs_);
}

Graph Graph::transpose() const {
  std::vector<Edge> reversed;
  reversed.reserve(edges_.size());
  for (const Edge& e : edges_) reversed.push_back({e.to, e.from, e.weight});
  return Graph(n_, directed_, std::move(reversed));
}

void GraphBuilder::add_two_way(Vertex u, Vertex v, Weight w) {
  edges_.push_back({u, v, w});
  if (directed_) edges_.push_back({v, u, w});
}

std::vector<Vertex> GraphBuilder::add_subdivided_edge(Vertex u, Vertex v, std::size_t length) {
  if (length == 0) throw PreconditionError("subdivided edge needs length >= 1");
  std::vector<Vertex> inner;
  Vertex prev = u;
  for (std::size_t i = 1; i < length; ++i) {
    Vertex x = add_vertex();
    inner.push_back(x);
    add_two_way(prev, x);
    prev = x;
  }
  add_two_way(prev, v);
  return inner;
}

Graph GraphBuilder::build() && { return Graph(n_, directed_, std::move(edges_)); }

bool strongly_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  for (Direction dir : {Direction::kOut, Direction::kIn}) {
    const DistanceArray d = sssp(g, 0, dir);
    if (std::any_of(d.dist.begin(), d.dist.end(), [](Dist x) { return x == kUnreachable; })) {
      return false;
    }
    if (!g.directed()) break;
  }
  return true;
}

}  // namespace graphdiam
