#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "graphdiam/graph.hpp"

namespace graphdiam {

/// Exact rational num/den with den > 0.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

/// Parses "P/Q" (or a bare integer). Throws std::invalid_argument.
Ratio parse_ratio(const std::string& text);

/// Seeded generator whose derived draws are identical on every platform:
/// only the raw 64-bit engine output is used, never the std distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(Ratio p) { return below(p.den) < p.num; }
  /// k distinct values from [0, n), sorted ascending.
  std::vector<Vertex> sample(Vertex n, std::size_t k);
  /// k distinct members of `pool`, in ascending order.
  std::vector<Vertex> sample_from(const std::vector<Vertex>& pool, std::size_t k);

private:
  std::mt19937_64 engine_;
};

/// ceil(sqrt(x)) in exact integer arithmetic.
std::uint64_t ceil_sqrt(std::uint64_t x);

/// min(n, max(1, ceil(2 * sqrt(n) * ln n))): the size of a sample that hits
/// every neighborhood of size ceil(sqrt(n)) with high probability.
std::size_t sqrt_log_sample_size(std::size_t n);

/// max(1, ceil(2 * ln n)).
std::size_t log_sample_size(std::size_t n);

}  // namespace graphdiam
