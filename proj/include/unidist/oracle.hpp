#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unidist/decompose.hpp"
#include "unidist/degree_sequence.hpp"
#include "unidist/graph.hpp"

namespace unidist {

/// Raised when a brute-force routine is asked for a graph above its cap.
class too_large_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr u64 default_oracle_cap = 10;

struct Permutation {
  std::vector<u64> mapping;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

struct Labeling {
  std::vector<u64> colors;  // values in 1..color_count
  u64 color_count = 0;
};

namespace detail {

inline void check_cap(const Graph& g, u64 cap, const char* what) {
  if (g.vertex_count() > cap) throw too_large_error(std::string(what) + ": graph above oracle cap");
  if (g.vertex_count() > 63) throw too_large_error(std::string(what) + ": oracle cap above 63");
}

inline std::vector<u64> adjacency_masks(const Graph& g) {
  std::vector<u64> masks(g.vertex_count(), 0);
  for (u64 v = 0; v < g.vertex_count(); ++v)
    for (u64 w : g.neighbors(v)) masks[v] |= u64{1} << w;
  return masks;
}

/// Backtracking matcher: maps vertices of g onto vertices of h in id order,
/// candidates filtered by degree, an optional class constraint, and adjacency
/// consistency with the mapped prefix.
struct Matcher {
  const std::vector<u64>& g_masks;
  const std::vector<u64>& h_masks;
  const std::vector<u64>& g_degs;
  const std::vector<u64>& h_degs;
  const std::vector<u64>* g_classes = nullptr;  // class of each g vertex
  const std::vector<u64>* h_classes = nullptr;

  std::vector<u64> map;
  std::vector<char> used;

  explicit Matcher(const std::vector<u64>& gm, const std::vector<u64>& hm,
                   const std::vector<u64>& gd, const std::vector<u64>& hd)
      : g_masks(gm), h_masks(hm), g_degs(gd), h_degs(hd),
        map(gm.size(), 0), used(hm.size(), 0) {}

  bool consistent(u64 pos, u64 w) const {
    if (g_degs[pos] != h_degs[w]) return false;
    if (g_classes && (*g_classes)[pos] != (*h_classes)[w]) return false;
    for (u64 j = 0; j < pos; ++j) {
      const bool e1 = (g_masks[pos] >> j) & 1;
      const bool e2 = (h_masks[w] >> map[j]) & 1;
      if (e1 != e2) return false;
    }
    return true;
  }

  /// Visits matches in lexicographic order; stops when visit returns true.
  template <typename Visit>
  bool search(u64 pos, const Visit& visit) {
    const u64 n = map.size();
    if (pos == n) return visit(map);
    for (u64 w = 0; w < used.size(); ++w) {
      if (used[w] || !consistent(pos, w)) continue;
      used[w] = 1;
      map[pos] = w;
      if (search(pos + 1, visit)) return true;
      used[w] = 0;
    }
    return false;
  }
};

inline std::vector<u64> degree_vector(const Graph& g) {
  std::vector<u64> d(g.vertex_count());
  for (u64 v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  return d;
}

/// True when some non-identity automorphism of g maps every vertex inside its
/// own class.
inline bool has_nontrivial_class_preserving_automorphism(const Graph& g,
                                                         const std::vector<u64>& classes) {
  const auto masks = adjacency_masks(g);
  const auto degs = degree_vector(g);
  Matcher m(masks, masks, degs, degs);
  m.g_classes = &classes;
  m.h_classes = &classes;
  return m.search(0, [](const std::vector<u64>& map) {
    for (u64 i = 0; i < map.size(); ++i)
      if (map[i] != i) return true;
    return false;  // identity: keep searching
  });
}

}  // namespace detail

/// Every automorphism of g, identity included, in lexicographic mapping order.
inline std::vector<Permutation> automorphisms(const Graph& g, u64 cap = default_oracle_cap) {
  detail::check_cap(g, cap, "automorphisms");
  const auto masks = detail::adjacency_masks(g);
  const auto degs = detail::degree_vector(g);
  std::vector<Permutation> out;
  detail::Matcher m(masks, masks, degs, degs);
  m.search(0, [&](const std::vector<u64>& map) {
    out.push_back(Permutation{map});
    return false;
  });
  return out;
}

inline u64 automorphism_count(const Graph& g, u64 cap = default_oracle_cap) {
  detail::check_cap(g, cap, "automorphism_count");
  const auto masks = detail::adjacency_masks(g);
  const auto degs = detail::degree_vector(g);
  u64 count = 0;
  detail::Matcher m(masks, masks, degs, degs);
  m.search(0, [&](const std::vector<u64>&) {
    ++count;
    return false;
  });
  return count;
}

/// True when no non-identity automorphism preserves every color of phi.
inline bool is_distinguishing(const Graph& g, const Labeling& phi) {
  if (phi.colors.size() != g.vertex_count())
    throw std::invalid_argument("is_distinguishing: labeling length mismatch");
  for (u64 c : phi.colors)
    if (c < 1 || c > phi.color_count)
      throw std::invalid_argument("is_distinguishing: color out of range");
  return !detail::has_nontrivial_class_preserving_automorphism(g, phi.colors);
}

/// Exhaustive distinguishing number: the least c admitting a color partition
/// into at most c classes that no non-identity automorphism preserves.
/// Partitions are enumerated as restricted growth strings; a labeling breaks
/// the symmetries exactly when its color partition does.
inline u64 brute_dist_number(const Graph& g, u64 cap = default_oracle_cap) {
  detail::check_cap(g, cap, "brute_dist_number");
  const u64 n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("brute_dist_number: empty graph");

  std::vector<u64> rgs(n, 0);
  // Enumerates partitions with exactly `blocks` classes; partitions with
  // fewer were already rejected at smaller c.
  auto enumerate = [&](auto&& self, u64 pos, u64 used, u64 blocks) -> bool {
    if (pos == n)
      return used == blocks && !detail::has_nontrivial_class_preserving_automorphism(g, rgs);
    if (used + (n - pos) < blocks) return false;
    const u64 limit = std::min(blocks - 1, used);
    for (u64 v = 0; v <= limit; ++v) {
      rgs[pos] = v;
      if (self(self, pos + 1, std::max(used, v + 1), blocks)) return true;
    }
    return false;
  };
  for (u64 c = 1; c < n; ++c)
    if (enumerate(enumerate, 0, 0, c)) return c;
  return n;  // all-distinct colors always distinguish
}

/// Number of inequivalent distinguishing c-labelings: distinguishing labelings
/// counted up to automorphism. The automorphism group acts freely on them, so
/// the labeling count divides exactly by |Aut|; a remainder is a hard error.
inline u64 count_inequivalent(const Graph& g, u64 c, u64 cap = default_oracle_cap) {
  detail::check_cap(g, cap, "count_inequivalent");
  if (c == 0 || c > cap) throw too_large_error("count_inequivalent: color count above cap");
  const u64 n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("count_inequivalent: empty graph");

  u64 total = 0;
  std::vector<u64> rgs(n, 0);
  auto enumerate = [&](auto&& self, u64 pos, u64 used) -> void {
    if (pos == n) {
      if (!detail::has_nontrivial_class_preserving_automorphism(g, rgs)) {
        u64 ways = 1;  // falling factorial: injective block -> color maps
        for (u64 b = 0; b < used; ++b) ways *= c - b;
        total += ways;
      }
      return;
    }
    const u64 limit = std::min(c - 1, used);
    for (u64 v = 0; v <= limit; ++v) {
      rgs[pos] = v;
      self(self, pos + 1, std::max(used, v + 1));
    }
  };
  enumerate(enumerate, 0, 0);

  const u64 aut = automorphism_count(g, cap);
  if (total % aut != 0)
    throw std::logic_error("count_inequivalent: labeling count not divisible by |Aut|");
  return total / aut;
}

/// Every (p,q) satisfying the decomposition window equation, by exhaustive scan.
inline std::vector<GoodPair> brute_good_pairs(const DegreeSequence& seq) {
  const std::vector<u64> d = expand(seq);
  const u64 n = d.size();
  if (n < 2) throw std::invalid_argument("brute_good_pairs: need n >= 2");
  std::vector<u64> prefix(n + 1, 0);
  for (u64 i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];

  std::vector<GoodPair> out;
  for (u64 p = 0; p < n; ++p)
    for (u64 q = 0; p + q < n; ++q) {
      if (p + q == 0) continue;
      const u64 front = prefix[p];
      const u64 back = prefix[n] - prefix[n - q];
      if (front == p * (n - q - 1) + back) out.push_back(GoodPair{p, q});
    }
  return out;
}

struct SplitWitness {
  std::vector<u64> a_set;
  std::vector<u64> b_set;
};

/// Exhaustive split test: engaged with a clique/stable bipartition when one exists.
inline std::optional<SplitWitness> brute_is_split(const Graph& g, u64 cap = default_oracle_cap) {
  detail::check_cap(g, cap, "brute_is_split");
  const u64 n = g.vertex_count();
  const auto masks = detail::adjacency_masks(g);
  const u64 full = (u64{1} << n) - 1;
  for (u64 mask = 0; mask <= full; ++mask) {
    const u64 stable = full & ~mask;
    bool ok = true;
    for (u64 v = 0; v < n && ok; ++v) {
      if ((mask >> v) & 1)
        ok = (masks[v] & mask) == (mask ^ (u64{1} << v));  // clique side
      else
        ok = (masks[v] & stable) == 0;  // stable side
    }
    if (!ok) continue;
    SplitWitness w;
    for (u64 v = 0; v < n; ++v) ((mask >> v) & 1 ? w.a_set : w.b_set).push_back(v);
    return w;
  }
  return std::nullopt;
}

inline bool brute_isomorphic(const Graph& g, const Graph& h, u64 cap = default_oracle_cap) {
  detail::check_cap(g, cap, "brute_isomorphic");
  detail::check_cap(h, cap, "brute_isomorphic");
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  auto gd = detail::degree_vector(g);
  auto hd = detail::degree_vector(h);
  {
    auto gs = gd, hs = hd;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return false;
  }
  const auto gm = detail::adjacency_masks(g);
  const auto hm = detail::adjacency_masks(h);
  detail::Matcher m(gm, hm, gd, hd);
  return m.search(0, [](const std::vector<u64>&) { return true; });
}

}  // namespace unidist
