#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mdbc/error.hpp"
#include "mdbc/types.hpp"

namespace mdbc {

/// Residue classes J_1..J_{m+1} of {1..n} modulo m + 1:
/// J_r = { k : k = r (mod m+1) }. Indices within a class are >= m + 1 apart.
struct ResidueClassPartition {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<std::size_t>> classes;  // classes[r - 1] is J_r
};

inline ResidueClassPartition residue_classes(std::size_t n, std::size_t m) {
  ResidueClassPartition out{n, m, std::vector<std::vector<std::size_t>>(m + 1)};
  for (std::size_t k = 1; k <= n; ++k) {
    // k mod (m+1) == 0 belongs to J_{m+1}.
    const std::size_t r = (k - 1) % (m + 1);
    out.classes[r].push_back(k);
  }
  return out;
}

/// The r-shifted partition of {1..n} into length-m blocks
/// I_j = {r + (j-1)m + 1, ..., r + jm} clipped to {1..n}, j = 0, 1, ...
/// Empty blocks are omitted, so blocks.front() is I_0 when r > 0.
struct ShiftedBlockPartition {
  std::size_t n = 0;
  std::size_t m = 1;
  std::size_t shift = 0;
  std::vector<IndexRange> blocks;
};

inline ShiftedBlockPartition shifted_blocks(std::size_t n, std::size_t m, std::size_t r) {
  if (m < 1) throw DomainError("shifted blocks require m >= 1");
  if (r >= m) {
    throw DomainError("shift " + std::to_string(r) + " outside [0, " +
                      std::to_string(m - 1) + "]");
  }
  ShiftedBlockPartition out{n, m, r, {}};
  if (n == 0) return out;
  // I_0 = {r - m + 1 .. r} clipped, which is {1..r}.
  if (r > 0) out.blocks.push_back({1, std::min(r, n)});
  for (std::size_t start = r + 1; start <= n; start += m) {
    out.blocks.push_back({start, std::min(start + m - 1, n)});
  }
  return out;
}

/// Number of shifts r in {0..m-1} for which i and l (i < l) share a block:
/// m - d when the gap d = l - i is at most m - 1, otherwise 0.
inline std::size_t pair_shift_count(std::size_t i, std::size_t l, std::size_t m) {
  if (m < 1) throw DomainError("pair_shift_count requires m >= 1");
  if (i >= l) throw DomainError("pair_shift_count requires i < l");
  const std::size_t d = l - i;
  return d <= m - 1 ? m - d : 0;
}

}  // namespace mdbc
