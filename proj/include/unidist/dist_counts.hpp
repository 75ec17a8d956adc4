#pragma once

#include <cstdint>
#include <stdexcept>

#include "unidist/degree_sequence.hpp"

namespace unidist {

using u128 = unsigned __int128;

/// Least c with C(c,2) >= m: the color count needed to give m disjoint edges
/// pairwise-distinct color pairs. Incremental, O(sqrt(m)).
inline u64 find_dist_mk2(u64 m) {
  if (m == 0) throw std::invalid_argument("find_dist_mk2: m must be positive");
  u64 curr = 2;
  u128 val = 1;  // C(curr, 2); wider than m so the sum cannot wrap
  while (val < m) {
    ++curr;
    val += curr - 1;
  }
  return curr;
}

/// Diagnostic result of the color search for star compositions: the answer,
/// the exact final loop value curr*C(curr,p), and whether the value had to be
/// clamped because it no longer fits 128 bits (the comparison against q is
/// still exact in that case).
struct DistSProbe {
  u64 colors = 0;
  u128 final_val = 0;
  bool saturated = false;
};

inline DistSProbe find_dist_s_probe(u64 p, u64 q) {
  if (p == 0 || q == 0) throw std::invalid_argument("find_dist_s: p and q must be positive");
  constexpr u128 kMax = ~static_cast<u128>(0);
  u64 curr = p;
  u128 val = p;  // curr * C(curr, p)
  bool saturated = false;
  while (!saturated && val < q) {
    ++curr;
    // val <- val * curr^2 / ((curr-1)(curr-p)); every division is exact.
    u128 t = val * curr;  // val < q <= 2^64-1 and curr < 2^64, so this fits
    if (t <= kMax / curr) {
      t *= curr;
      if (t % (curr - 1) != 0) throw std::logic_error("find_dist_s: inexact division");
      t /= curr - 1;
      if (t % (curr - p) != 0) throw std::logic_error("find_dist_s: inexact division");
      t /= curr - p;
      val = t;
    } else {
      // Divide before the second multiply; if even that overflows, the true
      // value is at least 2^64 > q and the loop is done.
      if (t % (curr - 1) != 0) throw std::logic_error("find_dist_s: inexact division");
      t /= curr - 1;
      if (t % (curr - p) != 0) throw std::logic_error("find_dist_s: inexact division");
      t /= curr - p;  // C(curr, p)
      if (t > kMax / curr) {
        saturated = true;
        val = q;
      } else {
        val = t * curr;
      }
    }
  }
  return DistSProbe{curr, val, saturated};
}

/// Least c with c*C(c,p) >= q: colors needed for q pairwise-adjacent stars of
/// p leaves each. Returns p outright when p >= q.
inline u64 find_dist_s(u64 p, u64 q) { return find_dist_s_probe(p, q).colors; }

}  // namespace unidist
