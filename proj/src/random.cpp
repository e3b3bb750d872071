#include "graphdiam/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace graphdiam {

Ratio parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  auto parse = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("expected P/Q with nonnegative integers, got '" + text + "'");
    }
    return std::stoull(s);
  };
  Ratio r;
  r.num = parse(text.substr(0, slash));
  r.den = slash == std::string::npos ? 1 : parse(text.substr(slash + 1));
  if (r.den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  const std::uint64_t g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below(0)");
  // reject the top partial block so every residue is equally likely
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<Vertex> Rng::sample(Vertex n, std::size_t k) {
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  return sample_from(pool, k);
}

std::vector<Vertex> Rng::sample_from(const std::vector<Vertex>& pool, std::size_t k) {
  std::vector<Vertex> p = pool;
  k = std::min(k, p.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + below(p.size() - i);
    std::swap(p[i], p[j]);
  }
  p.resize(k);
  std::sort(p.begin(), p.end());
  return p;
}

std::uint64_t ceil_sqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r >= x) --r;
  while (r * r < x) ++r;
  return r;
}

std::size_t sqrt_log_sample_size(std::size_t n) {
  if (n == 0) return 0;
  const double v = std::ceil(2.0 * std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n)));
  return std::clamp<std::size_t>(static_cast<std::size_t>(v), 1, n);
}

std::size_t log_sample_size(std::size_t n) {
  if (n <= 1) return 1;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(2.0 * std::log(static_cast<double>(n)))));
}

}  // namespace graphdiam
