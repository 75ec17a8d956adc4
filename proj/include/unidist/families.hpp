#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "unidist/classify.hpp"
#include "unidist/decompose.hpp"
#include "unidist/graph.hpp"

namespace unidist {

/// splitmix64: the 64-bit mixer from Steele et al.'s SplittableRandom.
/// Chosen so generated instances are reproducible from the seed alone.
struct SplitMix64 {
  u64 state = 0;

  explicit SplitMix64(u64 seed) : state(seed) {}

  u64 next() {
    state += 0x9E3779B97F4A7C15ULL;
    u64 z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound); bound 0 yields 0.
  u64 below(u64 bound) { return bound == 0 ? 0 : next() % bound; }
};

namespace detail {

/// Stars with pairwise-adjacent centers: group i contributes `count` centers
/// of `leaves` leaves each. Centers come first, grouped, then leaves grouped
/// by center. Returns the partition A = centers, B = leaves.
inline SplitGraphWithPartition build_star_groups(const std::vector<std::pair<u64, u64>>& groups) {
  u64 centers = 0, leaves = 0;
  for (const auto& [p, q] : groups) {
    centers += q;
    leaves += p * q;
  }
  SplitGraphWithPartition sg{Graph(centers + leaves), {}, {}};
  for (u64 i = 0; i < centers; ++i) {
    sg.a_set.push_back(i);
    for (u64 j = i + 1; j < centers; ++j) sg.graph.add_edge(i, j);
  }
  u64 center = 0, leaf = centers;
  for (const auto& [p, q] : groups) {
    for (u64 c = 0; c < q; ++c, ++center) {
      for (u64 l = 0; l < p; ++l, ++leaf) {
        sg.graph.add_edge(center, leaf);
        sg.b_set.push_back(leaf);
      }
    }
  }
  return sg;
}

inline Graph build_mk2(u64 m) {
  Graph g(2 * m);
  for (u64 i = 0; i < m; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

}  // namespace detail

/// Concrete realization of a split family kind, with its KS-partition.
inline SplitGraphWithPartition make_split_family(const UnigraphKind& kind) {
  if (const auto* k = std::get_if<CompleteKind>(&kind)) {
    if (k->size == 0) throw std::invalid_argument("complete block needs size >= 1");
    SplitGraphWithPartition sg{Graph(k->size), {}, {}};
    for (u64 i = 0; i < k->size; ++i) {
      sg.a_set.push_back(i);
      for (u64 j = i + 1; j < k->size; ++j) sg.graph.add_edge(i, j);
    }
    return sg;
  }
  if (const auto* k = std::get_if<IsolatedKind>(&kind)) {
    if (k->size == 0) throw std::invalid_argument("isolated block needs size >= 1");
    SplitGraphWithPartition sg{Graph(k->size), {}, {}};
    for (u64 i = 0; i < k->size; ++i) sg.b_set.push_back(i);
    return sg;
  }
  if (std::holds_alternative<TrivialKKind>(kind)) return SplitGraphWithPartition{Graph(1), {0}, {}};
  if (std::holds_alternative<TrivialSKind>(kind)) return SplitGraphWithPartition{Graph(1), {}, {0}};
  if (const auto* k = std::get_if<SKind>(&kind)) {
    if (k->p < 1 || k->q < 2) throw std::invalid_argument("S(p,q) needs p >= 1, q >= 2");
    return detail::build_star_groups({{k->p, k->q}});
  }
  if (const auto* k = std::get_if<S2Kind>(&kind)) {
    if (k->pairs.size() < 2) throw std::invalid_argument("S2 needs at least two star groups");
    for (std::size_t i = 0; i < k->pairs.size(); ++i) {
      if (k->pairs[i].first < 1 || k->pairs[i].second < 1)
        throw std::invalid_argument("S2 group parameters must be positive");
      if (i > 0 && k->pairs[i - 1].first <= k->pairs[i].first)
        throw std::invalid_argument("S2 star sizes must strictly decrease");
    }
    return detail::build_star_groups(k->pairs);
  }
  if (const auto* k = std::get_if<S3Kind>(&kind)) {
    if (k->p < 1 || k->q1 < 2 || k->q2 < 1)
      throw std::invalid_argument("S3(p,q1,q2) needs p >= 1, q1 >= 2, q2 >= 1");
    SplitGraphWithPartition sg = detail::build_star_groups({{k->p, k->q1}, {k->p + 1, k->q2}});
    // Extra stable vertex adjacent to the first group's centers only.
    const u64 e = sg.graph.vertex_count();
    SplitGraphWithPartition out{Graph(e + 1), sg.a_set, sg.b_set};
    for (u64 u = 0; u < e; ++u)
      for (u64 v : sg.graph.neighbors(u))
        if (u < v) out.graph.add_edge(u, v);
    for (u64 c = 0; c < k->q1; ++c) out.graph.add_edge(c, e);
    out.b_set.push_back(e);
    return out;
  }
  if (const auto* k = std::get_if<S4Kind>(&kind)) {
    if (k->p < 1 || k->q < 1) throw std::invalid_argument("S4(p,q) needs p >= 1, q >= 1");
    SplitGraphWithPartition s3 = make_split_family(S3Kind{k->p, 2, k->q});
    // Extra clique vertex adjacent to everything except e (the last vertex).
    const u64 e = s3.graph.vertex_count() - 1;
    const u64 f = s3.graph.vertex_count();
    SplitGraphWithPartition out{Graph(f + 1), s3.a_set, s3.b_set};
    for (u64 u = 0; u < f; ++u)
      for (u64 v : s3.graph.neighbors(u))
        if (u < v) out.graph.add_edge(u, v);
    for (u64 v = 0; v < f; ++v)
      if (v != e) out.graph.add_edge(f, v);
    out.a_set.push_back(f);
    std::sort(out.a_set.begin(), out.a_set.end());
    return out;
  }
  throw std::invalid_argument("make_split_family: kind is not a split family");
}

/// Concrete realization of any family kind.
inline Graph make_family(const UnigraphKind& kind) {
  if (std::holds_alternative<C5Kind>(kind)) {
    Graph g(5);
    for (u64 i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    return g;
  }
  if (const auto* k = std::get_if<MK2Kind>(&kind)) {
    if (k->m < 2) throw std::invalid_argument("standalone mK2 needs m >= 2");
    return detail::build_mk2(k->m);
  }
  if (const auto* k = std::get_if<U2Kind>(&kind)) {
    if (k->m < 1 || k->l < 2) throw std::invalid_argument("U2(m,l) needs m >= 1, l >= 2");
    Graph g(2 * k->m + 1 + k->l);
    for (u64 i = 0; i < k->m; ++i) g.add_edge(2 * i, 2 * i + 1);
    const u64 center = 2 * k->m;
    for (u64 l = 0; l < k->l; ++l) g.add_edge(center, center + 1 + l);
    return g;
  }
  if (const auto* k = std::get_if<U3Kind>(&kind)) {
    if (k->m < 1) throw std::invalid_argument("U3(m) needs m >= 1");
    // Center forms a triangle with each K2 pair and a 4-cycle with a 3-path.
    Graph g(2 * k->m + 4);
    const u64 center = 0;
    for (u64 i = 0; i < k->m; ++i) {
      const u64 a = 1 + 2 * i, b = 2 + 2 * i;
      g.add_edge(a, b);
      g.add_edge(center, a);
      g.add_edge(center, b);
    }
    const u64 x = 2 * k->m + 1, y = x + 1, z = y + 1;
    g.add_edge(x, y);
    g.add_edge(y, z);
    g.add_edge(center, x);
    g.add_edge(center, z);
    return g;
  }
  return make_split_family(kind).graph;
}

/// Degree sequence of the threshold graph random_threshold(seed, n) builds,
/// computed in O(n) without materializing edges.
inline DegreeSequence threshold_degree_sequence(u64 seed, u64 n) {
  if (n == 0) throw std::invalid_argument("threshold sequence needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<char> dominating(n, 0);
  for (u64 t = 1; t < n; ++t) dominating[t] = static_cast<char>(rng.next() & 1);
  std::vector<u64> degs(n, 0);
  u64 dominating_after = 0;
  for (u64 t = n; t-- > 0;) {
    degs[t] = dominating_after + (dominating[t] ? t : 0);
    if (dominating[t]) ++dominating_after;
  }
  return abbreviate(std::move(degs));
}

/// Threshold graph grown by seeded random isolated/dominating insertions.
inline Graph random_threshold(u64 seed, u64 n) {
  if (n == 0) throw std::invalid_argument("random_threshold needs n >= 1");
  SplitMix64 rng(seed);
  Graph g(n);
  for (u64 t = 1; t < n; ++t)
    if (rng.next() & 1)
      for (u64 v = 0; v < t; ++v) g.add_edge(t, v);
  return g;
}

/// A random unigraph together with the compact decomposition it was built from.
struct GeneratedUnigraph {
  Graph graph;
  std::vector<Component> expected_compact;  // leftmost-first ground truth
};

namespace detail {

struct Piece {
  enum class Type { k_block, s_block, split_fam, nonsplit_fam };
  Type type;
  u64 block_size = 0;
  SplitGraphWithPartition split;
  Graph graph;  // nonsplit_fam only
  u64 size = 0;
};

inline SplitGraphWithPartition apply_random_relative(SplitGraphWithPartition sg, SplitMix64& rng) {
  switch (rng.below(4)) {
    case 0: return sg;
    case 1: return complement_split(sg);
    case 2: return split_inverse(sg);
    default: return complement_split(split_inverse(sg));
  }
}

inline Piece make_block_piece(bool k_side, u64 m) {
  Piece p;
  p.type = k_side ? Piece::Type::k_block : Piece::Type::s_block;
  p.block_size = m;
  p.split = make_split_family(k_side ? UnigraphKind{CompleteKind{m}} : UnigraphKind{IsolatedKind{m}});
  p.size = m;
  return p;
}

inline Piece draw_piece(SplitMix64& rng, u64 max_size, bool rightmost) {
  std::vector<UnigraphKind> split_pool;
  for (u64 p = 1; p <= 4; ++p)
    for (u64 q = 2; q <= 5; ++q)
      if (q * (p + 1) <= max_size) split_pool.push_back(SKind{p, q});
  const std::vector<S2Kind> s2_grid = {
      S2Kind{{{2, 1}, {1, 1}}}, S2Kind{{{3, 1}, {1, 1}}}, S2Kind{{{2, 1}, {1, 2}}},
      S2Kind{{{3, 1}, {2, 1}}}, S2Kind{{{2, 2}, {1, 1}}}, S2Kind{{{2, 1}, {1, 3}}},
      S2Kind{{{3, 2}, {1, 1}}}, S2Kind{{{4, 1}, {2, 1}}}, S2Kind{{{3, 1}, {2, 2}}}};
  for (const auto& k : s2_grid) {
    u64 size = 0;
    for (const auto& [p, q] : k.pairs) size += q * (p + 1);
    if (size <= max_size) split_pool.push_back(k);
  }
  for (u64 p = 1; p <= 2; ++p)
    for (u64 q1 = 2; q1 <= 3; ++q1)
      for (u64 q2 = 1; q2 <= 2; ++q2) {
        const u64 size = (q1 + q2) * (p + 1) + q2 + 1;
        if (size <= max_size) split_pool.push_back(S3Kind{p, q1, q2});
      }
  for (u64 p = 1; p <= 2; ++p)
    for (u64 q = 1; q <= 2; ++q) {
      const u64 size = p * q + 2 * p + 2 * q + 4;
      if (size <= max_size) split_pool.push_back(S4Kind{p, q});
    }

  std::vector<UnigraphKind> nonsplit_pool;
  if (rightmost) {
    if (max_size >= 5) nonsplit_pool.push_back(C5Kind{});
    for (u64 m = 2; 2 * m <= max_size && m <= 5; ++m) nonsplit_pool.push_back(MK2Kind{m});
    for (u64 m = 1; m <= 2; ++m)
      for (u64 l = 2; l <= 4; ++l)
        if (2 * m + l + 1 <= max_size) nonsplit_pool.push_back(U2Kind{m, l});
    for (u64 m = 1; 2 * m + 4 <= max_size; ++m) nonsplit_pool.push_back(U3Kind{m});
  }

  // Weight the draw: blocks are always available, families when they fit.
  const u64 block_choices = 2;
  const u64 total = block_choices + split_pool.size() + nonsplit_pool.size();
  const u64 pick = rng.below(total);
  if (pick < block_choices) {
    const bool k_side = pick == 0;
    const u64 m = 1 + rng.below(std::min<u64>(max_size, 5));
    return make_block_piece(k_side, m);
  }
  if (pick < block_choices + split_pool.size()) {
    Piece p;
    p.type = Piece::Type::split_fam;
    p.split = apply_random_relative(make_split_family(split_pool[pick - block_choices]), rng);
    p.size = p.split.graph.vertex_count();
    return p;
  }
  Piece p;
  p.type = Piece::Type::nonsplit_fam;
  p.graph = make_family(nonsplit_pool[pick - block_choices - split_pool.size()]);
  if (rng.below(2) == 1) p.graph = complement(p.graph);
  p.size = p.graph.vertex_count();
  return p;
}

}  // namespace detail

/// Seeded random unigraph: a chain of indecomposable components (families with
/// small parameters, a random relative applied) and complete/isolated blocks,
/// joined by composition. Reports the exact compact decomposition it built.
inline GeneratedUnigraph random_unigraph_traced(u64 seed, u64 component_budget, u64 size_budget) {
  if (component_budget == 0 || size_budget == 0)
    throw std::invalid_argument("random_unigraph: budgets must be positive");
  SplitMix64 rng(seed);
  const u64 target_components = 1 + rng.below(component_budget);

  // Drawn rightmost-first, then reversed into leftmost-first order.
  std::vector<detail::Piece> pieces;
  u64 budget = size_budget;
  for (u64 t = 0; t < target_components && budget > 0; ++t) {
    detail::Piece p = detail::draw_piece(rng, budget, t == 0);
    budget -= p.size;
    pieces.push_back(std::move(p));
  }
  std::reverse(pieces.begin(), pieces.end());

  // Merge adjacent same-type blocks; a one-vertex rightmost block adopts its
  // left neighbor's type when that neighbor is a block.
  std::vector<detail::Piece> merged;
  for (auto& p : pieces) {
    const bool block = p.type == detail::Piece::Type::k_block || p.type == detail::Piece::Type::s_block;
    if (block && !merged.empty() && merged.back().type == p.type) {
      merged.back() = detail::make_block_piece(p.type == detail::Piece::Type::k_block,
                                               merged.back().block_size + p.block_size);
      continue;
    }
    merged.push_back(std::move(p));
  }
  if (merged.size() >= 2) {
    auto& last = merged.back();
    const bool last_trivial_block =
        (last.type == detail::Piece::Type::k_block || last.type == detail::Piece::Type::s_block) &&
        last.block_size == 1;
    const auto& left = merged[merged.size() - 2];
    if (last_trivial_block &&
        (left.type == detail::Piece::Type::k_block || left.type == detail::Piece::Type::s_block)) {
      const bool k_side = left.type == detail::Piece::Type::k_block;
      const u64 m = left.block_size + 1;
      merged.pop_back();
      merged.back() = detail::make_block_piece(k_side, m);
    }
  }

  // Compose right to left and record the expected compact components.
  GeneratedUnigraph out;
  std::vector<Component> expected;
  for (std::size_t idx = merged.size(); idx-- > 0;) {
    const auto& p = merged[idx];
    const bool rightmost = idx + 1 == merged.size();
    if (rightmost)
      out.graph = p.type == detail::Piece::Type::nonsplit_fam ? p.graph : p.split.graph;
    else
      out.graph = compose(p.split, out.graph);

    Component comp = [&]() -> Component {
      switch (p.type) {
        case detail::Piece::Type::k_block:
          if (rightmost && p.block_size == 1) return TailComponent{abbreviate({0})};
          return make_complete_block(p.block_size);
        case detail::Piece::Type::s_block:
          if (rightmost && p.block_size == 1) return TailComponent{abbreviate({0})};
          return make_isolated_block(p.block_size);
        case detail::Piece::Type::split_fam: {
          const PairedDegreeSequence pseq = paired_sequence_of(p.split);
          if (rightmost) return TailComponent{flatten(pseq)};
          return SplitComponent{pseq};
        }
        default:
          return TailComponent{degree_sequence_of(p.graph)};
      }
    }();
    expected.push_back(std::move(comp));
  }
  out.expected_compact.assign(expected.rbegin(), expected.rend());
  return out;
}

inline Graph random_unigraph(u64 seed, u64 component_budget, u64 size_budget) {
  return random_unigraph_traced(seed, component_budget, size_budget).graph;
}

}  // namespace unidist
