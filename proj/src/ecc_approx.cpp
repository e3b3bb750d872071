#include "graphdiam/ecc_approx.hpp"

#include <algorithm>

#include "graphdiam/shortest_paths.hpp"

namespace graphdiam {

namespace {

Vertex argmax(const std::vector<Dist>& d) {
  return static_cast<Vertex>(std::max_element(d.begin(), d.end()) - d.begin());
}

Dist max_of(const std::vector<Dist>& d) { return *std::max_element(d.begin(), d.end()); }

Dist floor_to_dist(const Rational& r) {
  const boost::multiprecision::cpp_int q = numerator(r) / denominator(r);
  return static_cast<Dist>(q);
}

}  // namespace

EccEstimate ecc_2approx(const Graph& g, std::uint64_t seed) {
  EccEstimate out;
  out.method = "ecc2";
  out.seed = seed;
  const Vertex n = g.vertex_count();
  if (n == 0) return out;

  Rng rng(seed);
  out.sample = rng.sample(n, sqrt_log_sample_size(n));
  const DistanceArray from_sample = multi_source_distance(g, out.sample, Direction::kOut);
  const Vertex w = argmax(from_sample.dist);
  const Neighborhood near_w = k_closest(g, w, ceil_sqrt(n), Direction::kIn);

  std::vector<Vertex> targets = out.sample;
  if (!std::binary_search(targets.begin(), targets.end(), w)) targets.push_back(w);
  out.values.assign(n, 0);
  for (Vertex s : targets) {
    const DistanceArray to_s = sssp(g, s, Direction::kIn);
    for (Vertex v = 0; v < n; ++v) out.values[v] = std::max(out.values[v], to_s[v]);
  }
  for (const NeighborhoodEntry& e : near_w.entries) {
    out.values[e.vertex] = max_of(sssp(g, e.vertex, Direction::kOut).dist);
  }
  out.has_unreachable =
      std::find(out.values.begin(), out.values.end(), kUnreachable) != out.values.end();
  return out;
}

bool hits_every_in_neighborhood(const Graph& g, std::span<const Vertex> sample, std::size_t s) {
  std::vector<char> in_sample(g.vertex_count(), 0);
  for (Vertex v : sample) in_sample[v] = 1;
  NeighborhoodSearch search(g);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const Neighborhood nb = search.closest(u, s, Direction::kIn);
    if (std::none_of(nb.entries.begin(), nb.entries.end(),
                     [&](const NeighborhoodEntry& e) { return in_sample[e.vertex]; })) {
      return false;
    }
  }
  return true;
}

DeltaEstimate ecc_2plusdelta(const Graph& g, Ratio tau, std::uint64_t seed, bool record_members) {
  if (tau.num == 0 || tau.num >= tau.den) throw PreconditionError("tau must lie strictly between 0 and 1");
  if (!strongly_connected(g)) {
    throw PreconditionError("the (2+delta) eccentricity estimate needs a strongly connected graph");
  }
  DeltaEstimate out;
  out.estimate.method = "ecc2d";
  out.estimate.seed = seed;
  const Vertex n = g.vertex_count();
  if (n == 0) return out;
  out.estimate.values.assign(n, 0);
  out.exact.assign(n, Rational(0));

  const Rational keep(static_cast<long long>(tau.den - tau.num), static_cast<long long>(tau.den));
  Rational D = Rational(boost::multiprecision::cpp_int(n - 1) * g.max_weight());
  std::vector<Vertex> S(n);
  for (Vertex v = 0; v < n; ++v) S[v] = v;

  Rng rng(seed);
  const std::size_t a_size = log_sample_size(n);
  auto assign = [&](Vertex v, const Rational& value) {
    out.exact[v] = value;
    out.estimate.values[v] = floor_to_dist(value);
  };

  while (S.size() > kTerminalActiveSize && D >= 1) {
    DeltaPhase phase;
    phase.D = D;
    phase.active = S.size();
    if (record_members) phase.members = S;
    const Rational thr = keep * D / 2;

    const std::vector<Vertex> A = rng.sample_from(S, std::min(S.size(), a_size));
    out.estimate.sample.insert(out.estimate.sample.end(), A.begin(), A.end());
    const Vertex w = argmax(multi_source_distance(g, A, Direction::kOut).dist);
    const DistanceArray to_w = sssp(g, w, Direction::kIn);

    std::vector<Vertex> by_dist = S;
    std::sort(by_dist.begin(), by_dist.end(), [&](Vertex a, Vertex b) {
      return std::pair(to_w[a], a) < std::pair(to_w[b], b);
    });
    const std::size_t half = (S.size() + 1) / 2;
    std::vector<Vertex> Sw(by_dist.begin(), by_dist.begin() + static_cast<std::ptrdiff_t>(half));
    std::sort(Sw.begin(), Sw.end());
    phase.sample_hit = std::any_of(A.begin(), A.end(), [&](Vertex a) {
      return std::binary_search(Sw.begin(), Sw.end(), a);
    });

    // by_dist[half] is the closest member of S outside S_w
    if (Rational(to_w[by_dist[half]]) >= thr) {
      phase.far_case = true;
      for (std::size_t i = half; i < by_dist.size(); ++i) assign(by_dist[i], thr);
      phase.assigned = by_dist.size() - half;
      S = std::move(Sw);
    } else {
      std::vector<Dist> r(n, 0);
      for (Vertex a : A) {
        const DistanceArray to_a = sssp(g, a, Direction::kIn);
        for (Vertex v : S) r[v] = std::max(r[v], to_a[v]);
      }
      std::vector<Vertex> kept;
      for (Vertex v : S) {
        if (Rational(r[v]) >= thr) {
          assign(v, thr);
        } else {
          kept.push_back(v);
        }
      }
      phase.assigned = S.size() - kept.size();
      S = std::move(kept);
      D *= keep;
    }
    out.phases.push_back(std::move(phase));
  }

  if (S.size() <= kTerminalActiveSize) {
    for (Vertex v : S) assign(v, Rational(max_of(sssp(g, v, Direction::kOut).dist)));
  } else {
    // D < 1 bounds every remaining integer eccentricity, so they are all 0
    for (Vertex v : S) assign(v, Rational(0));
  }
  std::sort(out.estimate.sample.begin(), out.estimate.sample.end());
  out.estimate.sample.erase(std::unique(out.estimate.sample.begin(), out.estimate.sample.end()),
                            out.estimate.sample.end());
  return out;
}

EccEstimate ecc_folklore_3approx(const Graph& g) {
  if (g.directed()) throw PreconditionError("the folklore 3-approximation needs an undirected graph");
  EccEstimate out;
  out.method = "ecc-folk";
  if (g.vertex_count() == 0) return out;
  const DistanceArray d = sssp(g, 0);
  const Dist ecc_r = max_of(d.dist);
  if (ecc_r == kUnreachable) throw PreconditionError("the folklore 3-approximation needs a connected graph");
  out.values.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.values[v] = std::max(d[v], ecc_r - d[v]);
  return out;
}

RadiusEstimate source_radius(const Graph& g, RadiusMethod method, std::uint64_t seed, Ratio tau) {
  if (g.vertex_count() == 0) throw PreconditionError("radius of an empty graph");
  RadiusEstimate out;
  out.estimate = method == RadiusMethod::kTwoApprox ? ecc_2approx(g, seed)
                                                    : ecc_2plusdelta(g, tau, seed).estimate;
  const auto& vals = out.estimate.values;
  out.center = static_cast<Vertex>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  out.value = max_of(sssp(g, out.center).dist);
  return out;
}

}  // namespace graphdiam
