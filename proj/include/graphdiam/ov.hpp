#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace graphdiam {

/// k sets of n binary vectors of dimension d.
struct OVInstance {
  int k = 0;
  int n = 0;
  int d = 0;
  std::vector<std::uint8_t> bits;  // [(set * n + index) * d + coord]
  std::optional<std::vector<int>> planted;  // one index per set, known orthogonal

  /// All-zero instance.
  static OVInstance zeros(int k, int n, int d);

  bool bit(int set, int index, int coord) const {
    return bits[(static_cast<std::size_t>(set) * n + index) * d + coord] != 0;
  }
  void set_bit(int set, int index, int coord, bool value) {
    bits[(static_cast<std::size_t>(set) * n + index) * d + coord] = value ? 1 : 0;
  }
};

enum class OVMode { kUnsat, kPlanted };

/// "unsat" or "planted"; throws std::invalid_argument otherwise.
OVMode parse_ov_mode(const std::string& text);
const char* to_string(OVMode mode);

/// Random instance. Unsat mode sets coordinate 0 of every vector, so no
/// tuple is orthogonal. Planted mode draws uniform bits, then for every
/// coordinate clears it in one random member of a random tuple.
/// Requires k >= 2, n >= 1, d >= 2.
OVInstance gen_ov(int k, int n, int d, OVMode mode, std::uint64_t seed);

/// True when no coordinate is 1 in every member of `tuple`.
bool is_orthogonal(const OVInstance& inst, const std::vector<int>& tuple);

/// Lexicographically first orthogonal tuple, if any.
std::optional<std::vector<int>> ov_brute_force(const OVInstance& inst);

}  // namespace graphdiam
