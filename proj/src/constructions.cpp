#include "graphdiam/constructions.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "graphdiam/exact.hpp"
#include "graphdiam/shortest_paths.hpp"

namespace graphdiam {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) { return b > kSaturated - a ? kSaturated : a + b; }

std::uint64_t pow_sat(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = mul_sat(r, base);
  return r;
}

void guard(std::uint64_t needed, const ConstructionLimits& limits, const std::string& what) {
  if (needed > limits.max_edges) {
    throw SizeGuardError(what + " needs up to " + std::to_string(needed) + " edges, cap is " +
                         std::to_string(limits.max_edges));
  }
}

// Edges of the layered graph before pruning: k layers of at most n^{k-1} d^{k-1}.
std::uint64_t layered_edge_bound(const OVInstance& inst) {
  const auto per_layer = mul_sat(pow_sat(inst.n, inst.k - 1), pow_sat(inst.d, inst.k - 1));
  return mul_sat(static_cast<std::uint64_t>(inst.k), per_layer);
}

// Mixed-radix ids inside one layer. Layer j has a slot for set i unless
// i is in {k-1-j, k-j}; internal layers also carry k-1 coordinates.
class LayerCodec {
public:
  LayerCodec(int k, int n, int d) : k_(k), n_(n), d_(d) {}

  bool present(int layer, int slot) const { return slot != k_ - 1 - layer && slot != k_ - layer; }
  bool has_coords(int layer) const { return layer > 0 && layer < k_; }

  std::uint64_t size(int layer) const {
    std::uint64_t s = 1;
    for (int i = 0; i < k_; ++i) {
      if (present(layer, i)) s = mul_sat(s, n_);
    }
    if (has_coords(layer)) s = mul_sat(s, pow_sat(d_, k_ - 1));
    return s;
  }

  std::uint64_t encode(int layer, const std::vector<int>& vec, const std::vector<int>& x) const {
    std::uint64_t code = 0;
    for (int i = 0; i < k_; ++i) {
      if (present(layer, i)) code = code * n_ + vec[i];
    }
    if (has_coords(layer)) {
      for (int c = 0; c < k_ - 1; ++c) code = code * d_ + x[c];
    }
    return code;
  }

  void decode(int layer, std::uint64_t code, std::vector<int>& vec, std::vector<int>& x) const {
    vec.assign(k_, -1);
    x.clear();
    if (has_coords(layer)) {
      x.assign(k_ - 1, 0);
      for (int c = k_ - 2; c >= 0; --c) {
        x[c] = static_cast<int>(code % d_);
        code /= d_;
      }
    }
    for (int i = k_ - 1; i >= 0; --i) {
      if (!present(layer, i)) continue;
      vec[i] = static_cast<int>(code % n_);
      code /= n_;
    }
  }

private:
  int k_, n_, d_;
};

void decode_coords(std::uint64_t code, int count, int d, std::vector<int>& x) {
  x.assign(count, 0);
  for (int c = count - 1; c >= 0; --c) {
    x[c] = static_cast<int>(code % d);
    code /= d;
  }
}

Vertex tuple_code(const std::vector<int>& tuple, int n) {
  std::uint64_t code = 0;
  for (int a : tuple) code = code * n + a;
  return static_cast<Vertex>(code);
}

void require_k(const OVInstance& inst, bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what + " does not accept k = " + std::to_string(inst.k));
}

ConstructionMeta base_meta(const std::string& name, const OVInstance& inst, Scope scope) {
  ConstructionMeta m;
  m.construction = name;
  m.k = inst.k;
  m.n = inst.n;
  m.d = inst.d;
  m.mode = inst.planted ? "planted" : "unsat";
  m.scope = scope;
  std::tie(m.promised_low, m.promised_high) = promised_gap(name, inst.k, 0);
  return m;
}

void add_layer_sets(const LayeredGraph& lg, ConstructionMeta& m) {
  for (int j = 0; j <= lg.k; ++j) {
    const std::string name = j == 0 ? "S" : j == lg.k ? "T" : "L" + std::to_string(j);
    m.sets.push_back({name, lg.layer_offsets[j], lg.layer_offsets[j + 1]});
  }
}

void finish(ConstructionOutput& out) {
  out.meta.vertices = out.graph.vertex_count();
  out.meta.edges = out.graph.edge_count();
}

// S'-side and T'-side tuples of a planted solution.
std::pair<std::vector<int>, std::vector<int>> witness_tuples(const OVInstance& inst) {
  const auto& a = *inst.planted;
  return {std::vector<int>(a.begin(), a.end() - 1), std::vector<int>(a.begin() + 1, a.end())};
}

// Shared topology of 5v8 and 6v10: S' and T' matchings plus an n-clique on
// each side attached to the S (T) tuples with the same first (last) vector.
ConstructionOutput build_clique_gadget(const std::string& name, const OVInstance& inst, Weight heavy,
                                       const ConstructionLimits& limits) {
  require_k(inst, inst.k == 3, name);
  const std::uint64_t n = inst.n;
  guard(add_sat(layered_edge_bound(inst), 4 * n * n + n * n), limits, name);
  const LayeredGraph lg = build_layered_graph(inst, limits);

  GraphBuilder b(lg.vertex_count, false);
  for (const Edge& e : lg.edges) {
    const bool middle = lg.labels[e.from].layer + lg.labels[e.to].layer == 3;  // L1-L2
    b.add_edge(e.from, e.to, middle ? heavy : 1);
  }
  const Vertex nn = static_cast<Vertex>(n * n);
  const Vertex s0 = lg.layer_offsets[0];
  const Vertex t0 = lg.layer_offsets[3];
  const Vertex sp = b.vertex_count();
  const Vertex spp = sp + nn;
  const Vertex tp = spp + static_cast<Vertex>(n);
  const Vertex tpp = tp + nn;
  const Vertex end = tpp + static_cast<Vertex>(n);
  while (b.vertex_count() < end) b.add_vertex();

  for (Vertex c = 0; c < nn; ++c) {
    b.add_edge(sp + c, s0 + c);
    b.add_edge(tp + c, t0 + c);
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex a2 = a + 1; a2 < n; ++a2) {
      b.add_edge(spp + a, spp + a2, heavy);
      b.add_edge(tpp + a, tpp + a2, heavy);
    }
    for (Vertex x = 0; x < n; ++x) {
      b.add_edge(spp + a, s0 + a * static_cast<Vertex>(n) + x);  // (a, x) in S
      b.add_edge(tpp + a, t0 + x * static_cast<Vertex>(n) + a);  // (x, a) in T
    }
  }

  ConstructionOutput out{std::move(b).build(), base_meta(name, inst, Scope::kAllPairs)};
  add_layer_sets(lg, out.meta);
  out.meta.sets.push_back({"S'", sp, spp});
  out.meta.sets.push_back({"S''", spp, tp});
  out.meta.sets.push_back({"T'", tp, tpp});
  out.meta.sets.push_back({"T''", tpp, end});
  if (inst.planted) {
    const auto [alpha, beta] = witness_tuples(inst);
    out.meta.witness = {sp + tuple_code(alpha, inst.n), tp + tuple_code(beta, inst.n)};
  }
  finish(out);
  return out;
}

ConstructionOutput build_directed_gadget(const std::string& name, const OVInstance& inst,
                                         const ConstructionLimits& limits) {
  const int k = inst.k;
  const std::uint64_t n = inst.n;
  const std::uint64_t side = pow_sat(n, k - 1);
  // two-way layered edges, k-2 long paths (matching and attachments), clique, arcs
  const auto extra = mul_sat(side, 4 * static_cast<std::uint64_t>(k)) + 2 * n * n;
  guard(add_sat(mul_sat(2, layered_edge_bound(inst)), extra), limits, name);
  const LayeredGraph lg = build_layered_graph(inst, limits);

  GraphBuilder b(lg.vertex_count, true);
  for (const Edge& e : lg.edges) b.add_two_way(e.from, e.to);
  const auto count = static_cast<Vertex>(side);
  const auto block = static_cast<Vertex>(side / n);  // tuples sharing one vector
  const auto len = static_cast<std::size_t>(k - 2);
  const Vertex s0 = lg.layer_offsets[0];
  const Vertex t0 = lg.layer_offsets[k];

  const Vertex sp = b.vertex_count();
  for (Vertex i = 0; i < count + n; ++i) b.add_vertex();
  const Vertex spp = sp + count;
  const Vertex sppp = b.vertex_count();
  for (Vertex c = 0; c < count; ++c) b.add_subdivided_edge(sp + c, s0 + c, len);
  for (Vertex c = 0; c < count; ++c) b.add_subdivided_edge(spp + c / block, s0 + c, len);
  const Vertex s_end = b.vertex_count();

  const Vertex tp = b.vertex_count();
  for (Vertex i = 0; i < count + n; ++i) b.add_vertex();
  const Vertex tpp = tp + count;
  const Vertex tppp = b.vertex_count();
  for (Vertex c = 0; c < count; ++c) b.add_subdivided_edge(tp + c, t0 + c, len);
  for (Vertex c = 0; c < count; ++c) b.add_subdivided_edge(tpp + c % n, t0 + c, len);
  const Vertex t_end = b.vertex_count();

  for (Vertex a = 0; a < n; ++a) {
    for (Vertex a2 = a + 1; a2 < n; ++a2) {
      b.add_two_way(spp + a, spp + a2);
      b.add_two_way(tpp + a, tpp + a2);
    }
  }
  for (Vertex c = 0; c < count; ++c) {
    b.add_edge(spp + c / block, sp + c);
    b.add_edge(tp + c, tpp + c % n);
  }

  ConstructionOutput out{std::move(b).build(), base_meta(name, inst, Scope::kAllPairs)};
  add_layer_sets(lg, out.meta);
  out.meta.sets.push_back({"S'", sp, spp});
  out.meta.sets.push_back({"S''", spp, sppp});
  out.meta.sets.push_back({"S'''", sppp, s_end});
  out.meta.sets.push_back({"T'", tp, tpp});
  out.meta.sets.push_back({"T''", tpp, tppp});
  out.meta.sets.push_back({"T'''", tppp, t_end});
  if (inst.planted) {
    const auto [alpha, beta] = witness_tuples(inst);
    out.meta.witness = {sp + tuple_code(alpha, inst.n), tp + tuple_code(beta, inst.n)};
  }
  finish(out);
  return out;
}

}  // namespace

const char* to_string(Scope scope) {
  switch (scope) {
    case Scope::kStAllEqual: return "st-all-equal";
    case Scope::kAllPairs: return "all-pairs";
    case Scope::kEccMax: return "ecc-max";
    case Scope::kEccOutEqual: return "ecc-out-equal";
  }
  return "?";
}

Scope parse_scope(const std::string& text) {
  for (Scope s : {Scope::kStAllEqual, Scope::kAllPairs, Scope::kEccMax, Scope::kEccOutEqual}) {
    if (text == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown scope '" + text + "'");
}

const LabeledSet& ConstructionMeta::set(std::string_view name) const {
  for (const LabeledSet& s : sets) {
    if (s.name == name) return s;
  }
  throw std::out_of_range("no vertex set named " + std::string(name));
}

std::pair<Dist, Dist> promised_gap(const std::string& construction, int k, std::uint64_t L) {
  const auto kk = static_cast<Dist>(k);
  if (construction == "kov") return {kk, 3 * kk - 2};
  if (construction == "5v8") return {5, 8};
  if (construction == "6v10") return {6, 10};
  if (construction == "3km4") return {3 * kk - 4, 5 * kk - 7};
  if (construction == "8v13") return {8, 13};
  if (construction == "ecc-und") return {2 * kk - 1, 4 * kk - 3};
  if (construction == "ecc-dir") return {L + 2, 2 * L + 3};
  throw PreconditionError("unknown construction '" + construction + "'");
}

Vertex LayeredGraph::s_id(const std::vector<int>& tuple) const {
  return layer_offsets[0] + tuple_code(tuple, n);
}

Vertex LayeredGraph::t_id(const std::vector<int>& tuple) const {
  return layer_offsets[k] + tuple_code(tuple, n);
}

LayeredGraph build_layered_graph(const OVInstance& inst, const ConstructionLimits& limits) {
  if (inst.k < 2) throw PreconditionError("layered graph needs k >= 2");
  const int k = inst.k;
  const int t = k - 2;
  const int n = inst.n;
  const int d = inst.d;
  guard(layered_edge_bound(inst), limits, "layered graph");

  const LayerCodec codec(k, n, d);
  std::vector<std::uint64_t> raw_offset(k + 2, 0);
  for (int j = 0; j <= k; ++j) raw_offset[j + 1] = raw_offset[j] + codec.size(j);
  if (raw_offset[k + 1] >= std::numeric_limits<Vertex>::max()) {
    throw SizeGuardError("layered graph has too many vertices");
  }
  const auto raw_n = static_cast<Vertex>(raw_offset[k + 1]);
  auto raw_id = [&](int layer, const std::vector<int>& vec, const std::vector<int>& x) {
    return static_cast<Vertex>(raw_offset[layer] + codec.encode(layer, vec, x));
  };

  std::vector<Edge> raw_edges;
  std::vector<int> vec, x, next;
  const std::uint64_t coord_tuples = pow_sat(d, k - 1);

  // S to L1: a_j is 1 at x_0..x_{t-j} for every j
  for (std::uint64_t code = 0; code < codec.size(0); ++code) {
    codec.decode(0, code, vec, x);
    const Vertex s = static_cast<Vertex>(raw_offset[0] + code);
    next = vec;
    next[t] = -1;
    for (std::uint64_t xc = 0; xc < coord_tuples; ++xc) {
      decode_coords(xc, k - 1, d, x);
      bool ok = true;
      for (int j = 0; j <= t && ok; ++j) {
        for (int c = 0; c <= t - j && ok; ++c) ok = inst.bit(j, vec[j], x[c]);
      }
      if (ok) raw_edges.push_back({s, raw_id(1, next, x), 1});
    }
  }
  // L_i to L_{i+1}: forget a_{t-i}, pick any vector for slot t+2-i
  for (int i = 1; i <= t; ++i) {
    for (std::uint64_t code = 0; code < codec.size(i); ++code) {
      codec.decode(i, code, vec, x);
      const Vertex u = static_cast<Vertex>(raw_offset[i] + code);
      next = vec;
      next[t - i] = -1;
      for (int c = 0; c < n; ++c) {
        next[t + 2 - i] = c;
        raw_edges.push_back({u, raw_id(i + 1, next, x), 1});
      }
    }
  }
  // L_{t+1} to T: b_j is 1 at x_{t+1-j}..x_t for every j >= 1
  for (std::uint64_t code = 0; code < codec.size(k); ++code) {
    codec.decode(k, code, vec, x);
    const Vertex v = static_cast<Vertex>(raw_offset[k] + code);
    next = vec;
    next[1] = -1;
    for (std::uint64_t xc = 0; xc < coord_tuples; ++xc) {
      decode_coords(xc, k - 1, d, x);
      bool ok = true;
      for (int j = 1; j <= t + 1 && ok; ++j) {
        for (int c = t + 1 - j; c <= t && ok; ++c) ok = inst.bit(j, vec[j], x[c]);
      }
      if (ok) raw_edges.push_back({raw_id(k - 1, next, x), v, 1});
    }
  }

  // prune internal vertices that lost a neighbor on one side
  std::vector<int> layer_of(raw_n);
  for (int j = 0; j <= k; ++j) {
    for (auto v = raw_offset[j]; v < raw_offset[j + 1]; ++v) layer_of[v] = j;
  }
  const Graph raw(raw_n, false, raw_edges);
  std::vector<std::uint32_t> left(raw_n, 0), right(raw_n, 0);
  for (const Edge& e : raw_edges) {  // edges always run from layer j to j+1
    ++right[e.from];
    ++left[e.to];
  }
  std::vector<char> alive(raw_n, 1);
  std::vector<Vertex> queue;
  auto internal = [&](Vertex v) { return layer_of[v] > 0 && layer_of[v] < k; };
  for (Vertex v = 0; v < raw_n; ++v) {
    if (internal(v) && (left[v] == 0 || right[v] == 0)) {
      alive[v] = 0;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (const Arc& a : raw.out_arcs(v)) {
      const Vertex w = a.head;
      if (!alive[w]) continue;
      auto& cnt = layer_of[w] > layer_of[v] ? left[w] : right[w];
      if (--cnt == 0 && internal(w)) {
        alive[w] = 0;
        queue.push_back(w);
      }
    }
  }

  LayeredGraph lg;
  lg.k = k;
  lg.n = n;
  std::vector<Vertex> new_id(raw_n, 0);
  lg.layer_offsets.assign(k + 2, 0);
  for (int j = 0; j <= k; ++j) {
    lg.layer_offsets[j] = lg.vertex_count;
    for (auto v = raw_offset[j]; v < raw_offset[j + 1]; ++v) {
      if (!alive[v]) continue;
      new_id[v] = lg.vertex_count++;
      LayeredVertex& label = lg.labels.emplace_back();
      label.layer = j;
      codec.decode(j, v - raw_offset[j], label.vectors, label.coords);
    }
  }
  lg.layer_offsets[k + 1] = lg.vertex_count;
  for (const Edge& e : raw_edges) {
    if (alive[e.from] && alive[e.to]) lg.edges.push_back({new_id[e.from], new_id[e.to], 1});
  }
  return lg;
}

ConstructionOutput build_kov_layered(const OVInstance& inst, const ConstructionLimits& limits) {
  require_k(inst, inst.k >= 2, "kov");
  LayeredGraph lg = build_layered_graph(inst, limits);
  ConstructionOutput out{Graph(lg.vertex_count, false, lg.edges),
                         base_meta("kov", inst, Scope::kStAllEqual)};
  add_layer_sets(lg, out.meta);
  if (inst.planted) {
    const auto [alpha, beta] = witness_tuples(inst);
    out.meta.witness = {lg.s_id(alpha), lg.t_id(beta)};
  }
  finish(out);
  return out;
}

ConstructionOutput build_diam_5v8(const OVInstance& inst, const ConstructionLimits& limits) {
  return build_clique_gadget("5v8", inst, 1, limits);
}

ConstructionOutput build_diam_6v10(const OVInstance& inst, const ConstructionLimits& limits) {
  return build_clique_gadget("6v10", inst, 2, limits);
}

ConstructionOutput build_diam_3km4(const OVInstance& inst, const ConstructionLimits& limits) {
  require_k(inst, inst.k >= 3, "3km4");
  return build_directed_gadget("3km4", inst, limits);
}

ConstructionOutput build_diam_8v13(const OVInstance& inst, const ConstructionLimits& limits) {
  require_k(inst, inst.k == 4, "8v13");
  return build_directed_gadget("8v13", inst, limits);
}

ConstructionOutput build_ecc_lb_undirected(const OVInstance& inst, const ConstructionLimits& limits) {
  require_k(inst, inst.k >= 2, "ecc-und");
  const int k = inst.k;
  const auto side = pow_sat(inst.n, k - 1);
  guard(add_sat(layered_edge_bound(inst), mul_sat(side, 2 * static_cast<std::uint64_t>(k))), limits,
        "ecc-und");
  const LayeredGraph lg = build_layered_graph(inst, limits);

  GraphBuilder b(lg.vertex_count, false);
  for (const Edge& e : lg.edges) b.add_edge(e.from, e.to);
  const auto count = static_cast<Vertex>(side);
  const Vertex s0 = lg.layer_offsets[0];
  const Vertex t0 = lg.layer_offsets[k];
  const Vertex y = b.add_vertex();
  const Vertex s_paths = b.vertex_count();
  for (Vertex c = 0; c < count; ++c) b.add_subdivided_edge(s0 + c, y, static_cast<std::size_t>(k - 1));
  const Vertex t_paths = b.vertex_count();
  for (Vertex c = 0; c < count; ++c) {
    Vertex prev = t0 + c;
    for (int i = 1; i < k; ++i) {
      const Vertex v = b.add_vertex();
      b.add_edge(prev, v);
      prev = v;
    }
  }
  const Vertex end = b.vertex_count();

  ConstructionOutput out{std::move(b).build(), base_meta("ecc-und", inst, Scope::kEccMax)};
  add_layer_sets(lg, out.meta);
  out.meta.sets.push_back({"Y", y, y + 1});
  out.meta.sets.push_back({"S_paths", s_paths, t_paths});
  out.meta.sets.push_back({"T_paths", t_paths, end});
  if (inst.planted) {
    const auto [alpha, beta] = witness_tuples(inst);
    const Vertex beta_end = t_paths + tuple_code(beta, inst.n) * static_cast<Vertex>(k - 1) +
                            static_cast<Vertex>(k - 2);
    out.meta.witness = {lg.s_id(alpha), beta_end};
  }
  finish(out);
  return out;
}

ConstructionOutput build_ecc_lb_directed(const OVInstance& inst, std::uint64_t L,
                                         const ConstructionLimits& limits) {
  require_k(inst, inst.k == 2, "ecc-dir");
  if (L < 1) throw PreconditionError("ecc-dir needs L >= 1");
  const std::uint64_t n = inst.n;
  const std::uint64_t d = inst.d;
  guard(add_sat(mul_sat(2 * n, d), mul_sat(n + 1, L + 2)), limits, "ecc-dir");

  std::vector<Vertex> coord_vertex(inst.d, 0);
  std::vector<char> kept(inst.d, 0);
  for (int c = 0; c < inst.d; ++c) {
    for (int u = 0; u < inst.n && !kept[c]; ++u) kept[c] = inst.bit(0, u, c);
  }

  GraphBuilder b(static_cast<Vertex>(n), true);
  const Vertex c_begin = b.vertex_count();
  for (int c = 0; c < inst.d; ++c) {
    if (kept[c]) coord_vertex[c] = b.add_vertex();
  }
  const Vertex v_begin = b.vertex_count();
  for (std::uint64_t i = 0; i < n * (L + 1); ++i) b.add_vertex();
  const Vertex x_begin = b.vertex_count();
  for (std::uint64_t i = 0; i < L; ++i) b.add_vertex();
  const Vertex end = b.vertex_count();
  auto path = [&](int v, std::uint64_t i) { return v_begin + static_cast<Vertex>(v * (L + 1) + i); };

  for (int u = 0; u < inst.n; ++u) {
    for (int c = 0; c < inst.d; ++c) {
      if (inst.bit(0, u, c)) b.add_edge(static_cast<Vertex>(u), coord_vertex[c]);
    }
    b.add_edge(static_cast<Vertex>(u), x_begin);
    b.add_edge(end - 1, static_cast<Vertex>(u));
  }
  for (int v = 0; v < inst.n; ++v) {
    for (int c = 0; c < inst.d; ++c) {
      if (kept[c] && inst.bit(1, v, c)) b.add_edge(coord_vertex[c], path(v, 0));
    }
    for (std::uint64_t i = 0; i < L; ++i) b.add_edge(path(v, i), path(v, i + 1));
  }
  for (Vertex x = x_begin; x + 1 < end; ++x) b.add_edge(x, x + 1);

  ConstructionOutput out{std::move(b).build(), base_meta("ecc-dir", inst, Scope::kEccOutEqual)};
  out.meta.L = L;
  std::tie(out.meta.promised_low, out.meta.promised_high) = promised_gap("ecc-dir", inst.k, L);
  out.meta.sets = {{"U", 0, c_begin}, {"C", c_begin, v_begin}, {"V", v_begin, x_begin}, {"X", x_begin, end}};
  if (inst.planted) {
    const auto& p = *inst.planted;
    out.meta.witness = {static_cast<Vertex>(p[0]), path(p[1], L)};
  }
  finish(out);
  return out;
}

ConstructionOutput build_construction(const std::string& name, const OVInstance& inst, std::uint64_t L,
                                      const ConstructionLimits& limits) {
  if (name == "kov") return build_kov_layered(inst, limits);
  if (name == "5v8") return build_diam_5v8(inst, limits);
  if (name == "6v10") return build_diam_6v10(inst, limits);
  if (name == "3km4") return build_diam_3km4(inst, limits);
  if (name == "8v13") return build_diam_8v13(inst, limits);
  if (name == "ecc-und") return build_ecc_lb_undirected(inst, limits);
  if (name == "ecc-dir") return build_ecc_lb_directed(inst, L, limits);
  throw PreconditionError("unknown construction '" + name + "'");
}

nlohmann::ordered_json metadata_to_json(const ConstructionMeta& meta) {
  nlohmann::ordered_json j;
  j["construction"] = meta.construction;
  j["k"] = meta.k;
  j["n"] = meta.n;
  j["d"] = meta.d;
  if (meta.construction == "ecc-dir") j["L"] = meta.L;
  j["mode"] = meta.mode;
  nlohmann::ordered_json sets = nlohmann::ordered_json::object();
  for (const LabeledSet& s : meta.sets) sets[s.name] = {s.begin, s.end};
  j["sets"] = sets;
  j["promised_low"] = meta.promised_low;
  j["promised_high"] = meta.promised_high;
  if (meta.witness) {
    j["witness"] = {meta.witness->first, meta.witness->second};
  } else {
    j["witness"] = nullptr;
  }
  j["scope"] = to_string(meta.scope);
  j["vertices"] = meta.vertices;
  j["edges"] = meta.edges;
  return j;
}

ConstructionMeta metadata_from_json(const nlohmann::json& j) {
  try {
    ConstructionMeta m;
    m.construction = j.at("construction").get<std::string>();
    m.k = j.at("k").get<int>();
    m.n = j.at("n").get<int>();
    m.d = j.at("d").get<int>();
    m.L = j.value("L", std::uint64_t{0});
    m.mode = j.at("mode").get<std::string>();
    if (m.mode != "unsat" && m.mode != "planted") throw MetadataError("mode must be unsat or planted");
    for (const auto& [name, range] : j.at("sets").items()) {
      if (!range.is_array() || range.size() != 2) throw MetadataError("set " + name + " is not [lo, hi)");
      m.sets.push_back({name, range[0].get<Vertex>(), range[1].get<Vertex>()});
    }
    m.promised_low = j.at("promised_low").get<Dist>();
    m.promised_high = j.at("promised_high").get<Dist>();
    const auto& w = j.at("witness");
    if (!w.is_null()) {
      if (!w.is_array() || w.size() != 2) throw MetadataError("witness must be [u, v] or null");
      m.witness = std::pair{w[0].get<Vertex>(), w[1].get<Vertex>()};
    }
    m.scope = parse_scope(j.at("scope").get<std::string>());
    m.vertices = j.at("vertices").get<Vertex>();
    m.edges = j.at("edges").get<std::size_t>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw MetadataError(std::string("bad metadata: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw MetadataError(std::string("bad metadata: ") + e.what());
  }
}

namespace {

std::string show(Dist d) { return d == kUnreachable ? "inf" : std::to_string(d); }

std::vector<Vertex> members(const ConstructionMeta& meta, const char* name) {
  const LabeledSet* s = nullptr;
  try {
    s = &meta.set(name);
  } catch (const std::out_of_range&) {
    throw MetadataError(std::string("scope needs a set named ") + name);
  }
  std::vector<Vertex> out;
  for (Vertex v = s->begin; v < s->end; ++v) out.push_back(v);
  return out;
}

// min and max of d(u, .) over the targets, from every source
std::pair<Dist, Dist> distance_range(const Graph& g, const std::vector<Vertex>& sources,
                                     const std::vector<Vertex>* targets) {
  Dist lo = kUnreachable, hi = 0;
  for (Vertex s : sources) {
    const DistanceArray d = sssp(g, s);
    if (targets) {
      for (Vertex t : *targets) {
        lo = std::min(lo, d[t]);
        hi = std::max(hi, d[t]);
      }
    } else {
      const Dist e = *std::max_element(d.dist.begin(), d.dist.end());
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
  }
  return {lo, hi};
}

}  // namespace

std::vector<BoundCheck> verify_construction(const Graph& g, const ConstructionMeta& meta) {
  if (meta.vertices != g.vertex_count() || meta.edges != g.edge_count()) {
    throw MetadataError("metadata says " + std::to_string(meta.vertices) + " vertices and " +
                        std::to_string(meta.edges) + " edges, graph has " +
                        std::to_string(g.vertex_count()) + " and " + std::to_string(g.edge_count()));
  }
  for (const LabeledSet& s : meta.sets) {
    if (s.begin > s.end || s.end > g.vertex_count()) throw MetadataError("set " + s.name + " is out of range");
  }
  if (meta.witness && (meta.witness->first >= g.vertex_count() || meta.witness->second >= g.vertex_count())) {
    throw MetadataError("witness is out of range");
  }

  std::vector<BoundCheck> checks;
  {
    BoundCheck c;
    try {
      const auto gap = promised_gap(meta.construction, meta.k, meta.L);
      c.pass = gap.first == meta.promised_low && gap.second == meta.promised_high;
      c.description = "promised gap " + std::to_string(meta.promised_low) + " vs " +
                      std::to_string(meta.promised_high) + " (construction gives " +
                      std::to_string(gap.first) + " vs " + std::to_string(gap.second) + ")";
    } catch (const PreconditionError&) {
      throw MetadataError("unknown construction '" + meta.construction + "'");
    }
    checks.push_back(c);
  }

  BoundCheck c;
  if (meta.mode == "planted") {
    if (!meta.witness) throw MetadataError("planted metadata has no witness");
    const Dist d = sssp(g, meta.witness->first)[meta.witness->second];
    c.pass = d >= meta.promised_high;
    c.description = "witness distance d(" + std::to_string(meta.witness->first) + "," +
                    std::to_string(meta.witness->second) + ") = " + show(d) +
                    " >= " + std::to_string(meta.promised_high);
    checks.push_back(c);
    return checks;
  }

  const Dist low = meta.promised_low;
  switch (meta.scope) {
    case Scope::kStAllEqual: {
      const auto T = members(meta, "T");
      const auto [lo, hi] = distance_range(g, members(meta, "S"), &T);
      c.pass = lo == low && hi == low;
      c.description = "all S-T distances = " + std::to_string(low) + " (observed " + show(lo) + ".." + show(hi) + ")";
      break;
    }
    case Scope::kAllPairs: {
      const Dist diam = exact_diameter(g);
      c.pass = diam <= low;
      c.description = "diameter " + show(diam) + " <= " + std::to_string(low);
      break;
    }
    case Scope::kEccMax: {
      const auto hi = distance_range(g, members(meta, "S"), nullptr).second;
      c.pass = hi <= low;
      c.description = "max eccentricity over S " + show(hi) + " <= " + std::to_string(low);
      break;
    }
    case Scope::kEccOutEqual: {
      const auto [lo, hi] = distance_range(g, members(meta, "U"), nullptr);
      c.pass = lo == low && hi == low;
      c.description = "all out-eccentricities over U = " + std::to_string(low) + " (observed " + show(lo) + ".." +
                      show(hi) + ")";
      break;
    }
  }
  checks.push_back(c);
  return checks;
}

}  // namespace graphdiam
