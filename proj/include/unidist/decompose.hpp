#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "unidist/degree_sequence.hpp"

namespace unidist {

/// Index split (p,q) certifying a decomposition of the current window:
/// the p largest degrees form the clique part of the peeled component, the q
/// smallest its stable part.
struct GoodPair {
  u64 p = 0;
  u64 q = 0;

  friend bool operator==(const GoodPair&, const GoodPair&) = default;
  friend bool operator<(const GoodPair& x, const GoodPair& y) {
    return x.p != y.p ? x.p < y.p : x.q < y.q;
  }
};

/// Adjustment bookkeeping for one peel. alpha is the size of the remaining
/// window after the peel, beta the total clique vertices removed before it.
struct PeelStep {
  GoodPair pair;
  u64 alpha = 0;
  u64 beta = 0;

  friend bool operator==(const PeelStep&, const PeelStep&) = default;
};

struct SplitComponent {
  PairedDegreeSequence pseq;

  friend bool operator==(const SplitComponent&, const SplitComponent&) = default;
};

/// Rightmost unpaired remainder; its sequence is component-local.
struct TailComponent {
  DegreeSequence seq;

  friend bool operator==(const TailComponent&, const TailComponent&) = default;
};

using Component = std::variant<SplitComponent, TailComponent>;

inline u64 component_vertex_count(const Component& c) {
  if (const auto* s = std::get_if<SplitComponent>(&c)) return s->pseq.vertex_count();
  return std::get<TailComponent>(c).seq.vertex_count();
}

/// Recognizes ((m-1)^m ; -): a complete block of m clique vertices.
inline std::optional<u64> as_complete_block(const Component& c) {
  const auto* s = std::get_if<SplitComponent>(&c);
  if (!s || !s->pseq.s_part.empty()) return std::nullopt;
  if (s->pseq.k_part.entries.size() != 1) return std::nullopt;
  const auto& e = s->pseq.k_part.entries[0];
  if (e.degree + 1 != e.count) return std::nullopt;
  return e.count;
}

/// Recognizes (- ; 0^m): a block of m isolated stable vertices.
inline std::optional<u64> as_isolated_block(const Component& c) {
  const auto* s = std::get_if<SplitComponent>(&c);
  if (!s || !s->pseq.k_part.empty()) return std::nullopt;
  if (s->pseq.s_part.entries.size() != 1) return std::nullopt;
  const auto& e = s->pseq.s_part.entries[0];
  if (e.degree != 0) return std::nullopt;
  return e.count;
}

inline Component make_complete_block(u64 m) {
  return SplitComponent{PairedDegreeSequence{DegreeSequence{{{m - 1, m}}}, DegreeSequence{}}};
}

inline Component make_isolated_block(u64 m) {
  return SplitComponent{PairedDegreeSequence{DegreeSequence{}, DegreeSequence{{{0, m}}}}};
}

/// Components listed leftmost-first (outermost component of the composition
/// first, the remainder last).
struct DecompositionResult {
  std::vector<Component> components;
  bool compact = false;
  std::vector<PeelStep> peels;  // canonical results only, one per split peel
};

/// Least good pair of the window, or nothing when the window's graph is
/// indecomposable.
///
/// `window` holds master degrees; the effective degree of position t is
/// window[t] - beta. Candidates are scanned in the only order in which the
/// least pair can appear: (0,1), then (p, #{i : d_i < p}) for p = 1,2,...
/// Cost is O(p+q) on success and O(window) on failure.
inline std::optional<GoodPair> find_good_pair(std::span<const u64> window, u64 beta) {
  const u64 m = window.size();
  if (m < 2) return std::nullopt;
  const auto d = [&](u64 t) { return window[t - 1] - beta; };  // 1-based

  if (d(m) == 0) return GoodPair{0, 1};
  if (d(1) == m - 1) return GoodPair{1, 0};

  u64 p = 1, q = 0;
  u64 frontsum = d(1), backsum = 0;
  while (p + q < m && frontsum != p * (m - q - 1) + backsum) {
    ++p;
    frontsum += d(p);
    while (p + q < m && d(m - q) < p) {
      ++q;
      backsum += d(m - q + 1);
    }
  }
  if (p + q < m && frontsum == p * (m - q - 1) + backsum) return GoodPair{p, q};
  return std::nullopt;
}

namespace detail {

inline RunList adjusted_runs(std::span<const u64> slice, u64 sub) {
  RunList out;
  for (u64 d : slice) {
    if (d < sub) throw std::invalid_argument("decompose: sequence is not graphical");
    const u64 v = d - sub;
    if (!out.empty() && out.back().degree == v)
      ++out.back().count;
    else
      out.push_back({v, 1});
  }
  return out;
}

/// The peel loop behind both decomposition flavors. Calls on_split for every
/// peeled component (with the master-array slices and adjustments needed to
/// build it) and on_tail once for the indecomposable remainder, if any.
template <typename OnSplit, typename OnTail>
void peel_master(std::span<const u64> master, OnSplit&& on_split, OnTail&& on_tail) {
  const u64 n = master.size();
  if (n == 0) throw std::invalid_argument("decompose: empty sequence");

  const u64* const base = master.data();
  u64 i = 0, j = n, beta = 0;
  while (i < j) {
    if (j - i == 1) {
      on_tail(std::span<const u64>{base + i, 1}, beta);
      return;
    }
    const std::span<const u64> window{base + i, j - i};
    const auto gp = find_good_pair(window, beta);
    if (!gp) {
      on_tail(window, beta);
      return;
    }
    const u64 alpha = (j - i) - gp->p - gp->q;
    on_split(*gp, alpha, beta, std::span<const u64>{base + i, gp->p},
             std::span<const u64>{base + (j - gp->q), gp->q});
    i += gp->p;
    j -= gp->q;
    beta += gp->p;
  }
}

/// Streaming form of the compact decomposition: trivial peels accumulate into
/// pending runs, flushed as block components. emit_block receives
/// (complete?, size); emit_split and emit_tail receive what peel_master saw.
template <typename EmitBlock, typename EmitSplit, typename EmitTail>
void compact_stream(std::span<const u64> master, EmitBlock&& emit_block,
                    EmitSplit&& emit_split, EmitTail&& emit_tail) {
  enum class Run { none, complete, isolated };
  Run pending = Run::none;
  u64 pending_count = 0;
  const auto flush = [&] {
    if (pending != Run::none) emit_block(pending == Run::complete, pending_count);
    pending = Run::none;
    pending_count = 0;
  };

  peel_master(
      master,
      [&](GoodPair gp, u64 alpha, u64 beta, std::span<const u64> k_slice,
          std::span<const u64> s_slice) {
        if (gp.p + gp.q == 1) {
          const Run type = gp.p == 1 ? Run::complete : Run::isolated;
          if (pending != type) flush();
          pending = type;
          ++pending_count;
          return;
        }
        flush();
        emit_split(alpha, beta, k_slice, s_slice);
      },
      [&](std::span<const u64> slice, u64 beta) {
        if (slice.size() == 1 && pending != Run::none) {
          ++pending_count;  // a one-vertex remainder adopts the pending type
          flush();
          return;
        }
        flush();
        emit_tail(slice, beta);
      });
  flush();
}

}  // namespace detail

/// Canonical decomposition from the degree sequence alone. Split components
/// are peeled left to right with their least good pairs; the indecomposable
/// remainder becomes the tail. Runs in O(n) on the expanded sequence.
inline DecompositionResult decompose(const DegreeSequence& seq) {
  const std::vector<u64> master = expand(seq);

  u64 count = 0;
  detail::peel_master(
      master, [&](GoodPair, u64, u64, std::span<const u64>, std::span<const u64>) { ++count; },
      [&](std::span<const u64>, u64) { ++count; });

  DecompositionResult result;
  result.components.reserve(count);
  result.peels.reserve(count);
  detail::peel_master(
      master,
      [&](GoodPair gp, u64 alpha, u64 beta, std::span<const u64> k_slice,
          std::span<const u64> s_slice) {
        result.components.push_back(SplitComponent{
            PairedDegreeSequence{DegreeSequence{detail::adjusted_runs(k_slice, beta + alpha)},
                                 DegreeSequence{detail::adjusted_runs(s_slice, beta)}}});
        result.peels.push_back(PeelStep{gp, alpha, beta});
      },
      [&](std::span<const u64> slice, u64 beta) {
        result.components.push_back(
            TailComponent{DegreeSequence{detail::adjusted_runs(slice, beta)}});
      });
  return result;
}

/// Compact form: maximal runs of one-vertex components of the same type merge
/// into a complete or isolated block. A trivial remainder adopts its left
/// neighbor's type first, when that neighbor is trivial too.
inline DecompositionResult decompose_compact(const DecompositionResult& canonical) {
  const auto& comps = canonical.components;
  DecompositionResult out;
  out.compact = true;
  if (comps.size() <= 1) {
    out.components = comps;
    return out;
  }

  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Component& c = comps[i];
    if (!out.components.empty()) {
      // A bare (0) remainder adopts the type of its (necessarily trivial)
      // left neighbor, which by now sits at the back as a block.
      const bool adopting_tail = i + 1 == comps.size() &&
                                 std::holds_alternative<TailComponent>(c) &&
                                 component_vertex_count(c) == 1;
      const bool k_one = adopting_tail || (as_complete_block(c) == std::optional<u64>{1});
      const bool s_one = adopting_tail || (as_isolated_block(c) == std::optional<u64>{1});
      if (k_one) {
        if (auto acc = as_complete_block(out.components.back())) {
          out.components.back() = make_complete_block(*acc + 1);
          continue;
        }
      }
      if (s_one) {
        if (auto acc = as_isolated_block(out.components.back())) {
          out.components.back() = make_isolated_block(*acc + 1);
          continue;
        }
      }
    }
    out.components.push_back(c);
  }
  return out;
}

/// Compact decomposition computed straight from the sequence: runs of
/// one-vertex peels accumulate into blocks as they come, so the canonical
/// component list is never materialized. Output equals
/// decompose_compact(decompose(seq)).
inline DecompositionResult decompose_compact(const DegreeSequence& seq) {
  const std::vector<u64> master = expand(seq);

  u64 count = 0;
  detail::compact_stream(
      master, [&](bool, u64) { ++count; },
      [&](u64, u64, std::span<const u64>, std::span<const u64>) { ++count; },
      [&](std::span<const u64>, u64) { ++count; });

  DecompositionResult out;
  out.compact = true;
  out.components.reserve(count);
  detail::compact_stream(
      master,
      [&](bool complete, u64 m) {
        out.components.push_back(complete ? make_complete_block(m) : make_isolated_block(m));
      },
      [&](u64 alpha, u64 beta, std::span<const u64> k_slice, std::span<const u64> s_slice) {
        out.components.push_back(SplitComponent{
            PairedDegreeSequence{DegreeSequence{detail::adjusted_runs(k_slice, beta + alpha)},
                                 DegreeSequence{detail::adjusted_runs(s_slice, beta)}}});
      },
      [&](std::span<const u64> slice, u64 beta) {
        out.components.push_back(
            TailComponent{DegreeSequence{detail::adjusted_runs(slice, beta)}});
      });
  return out;
}

/// Reconstructs the whole graph's degree sequence from a decomposition.
/// Walking right to left, a component's clique degrees gain the number of
/// vertices to its right, and every vertex to the right gains the clique size.
inline DegreeSequence recompose_sequence(const DecompositionResult& result) {
  struct Pending {
    u64 degree;
    u64 shift_at_insert;
  };
  std::vector<Pending> verts;
  u64 shift = 0;  // clique sizes of components processed so far

  for (auto it = result.components.rbegin(); it != result.components.rend(); ++it) {
    if (const auto* tail = std::get_if<TailComponent>(&*it)) {
      for (u64 d : expand(tail->seq)) verts.push_back({d, shift});
      continue;
    }
    const auto& pseq = std::get<SplitComponent>(*it).pseq;
    const u64 right = verts.size();
    shift += pseq.a();  // applies to the vertices already inserted, not these
    for (u64 d : expand(pseq.k_part)) verts.push_back({d + right, shift});
    for (u64 d : expand(pseq.s_part)) verts.push_back({d, shift});
  }

  std::vector<u64> degrees;
  degrees.reserve(verts.size());
  for (const auto& v : verts) degrees.push_back(v.degree + (shift - v.shift_at_insert));
  return abbreviate(std::move(degrees));
}

}  // namespace unidist
