#include "graphdiam/ov.hpp"

#include <stdexcept>

#include "graphdiam/graph.hpp"
#include "graphdiam/random.hpp"

namespace graphdiam {

OVInstance OVInstance::zeros(int k, int n, int d) {
  if (k < 1 || n < 1 || d < 1) throw PreconditionError("OV instance needs k, n, d >= 1");
  OVInstance inst;
  inst.k = k;
  inst.n = n;
  inst.d = d;
  inst.bits.assign(static_cast<std::size_t>(k) * n * d, 0);
  return inst;
}

OVMode parse_ov_mode(const std::string& text) {
  if (text == "unsat") return OVMode::kUnsat;
  if (text == "planted") return OVMode::kPlanted;
  throw std::invalid_argument("mode must be unsat or planted, got '" + text + "'");
}

const char* to_string(OVMode mode) { return mode == OVMode::kUnsat ? "unsat" : "planted"; }

OVInstance gen_ov(int k, int n, int d, OVMode mode, std::uint64_t seed) {
  if (k < 2) throw PreconditionError("OV instance needs k >= 2");
  if (d < 2) throw PreconditionError("OV instance needs d >= 2");
  OVInstance inst = OVInstance::zeros(k, n, d);
  Rng rng(seed);
  for (auto& b : inst.bits) b = static_cast<std::uint8_t>(rng.below(2));

  if (mode == OVMode::kUnsat) {
    for (int s = 0; s < k; ++s) {
      for (int i = 0; i < n; ++i) inst.set_bit(s, i, 0, true);
    }
    return inst;
  }

  std::vector<int> tuple(k);
  for (int s = 0; s < k; ++s) tuple[s] = static_cast<int>(rng.below(n));
  for (int c = 0; c < d; ++c) {
    const int s = static_cast<int>(rng.below(k));
    inst.set_bit(s, tuple[s], c, false);
  }
  if (!is_orthogonal(inst, tuple)) throw std::logic_error("planted tuple is not orthogonal");
  inst.planted = tuple;
  return inst;
}

bool is_orthogonal(const OVInstance& inst, const std::vector<int>& tuple) {
  for (int c = 0; c < inst.d; ++c) {
    bool all = true;
    for (int s = 0; s < inst.k && all; ++s) all = inst.bit(s, tuple[s], c);
    if (all) return false;
  }
  return true;
}

std::optional<std::vector<int>> ov_brute_force(const OVInstance& inst) {
  if (inst.k == 0 || inst.n == 0) return std::nullopt;
  std::vector<int> tuple(inst.k, 0);
  for (;;) {
    if (is_orthogonal(inst, tuple)) return tuple;
    int s = inst.k - 1;
    while (s >= 0 && ++tuple[s] == inst.n) tuple[s--] = 0;
    if (s < 0) return std::nullopt;
  }
}

}  // namespace graphdiam
