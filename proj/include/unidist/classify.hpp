#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "unidist/decompose.hpp"
#include "unidist/degree_sequence.hpp"
#include "unidist/dist_counts.hpp"

namespace unidist {

// Indecomposable unigraph families plus the block/trivial shapes that appear
// in compact decompositions.
struct C5Kind {
  friend bool operator==(const C5Kind&, const C5Kind&) = default;
};
struct MK2Kind {
  u64 m = 0;
  friend bool operator==(const MK2Kind&, const MK2Kind&) = default;
};
struct U2Kind {
  u64 m = 0, l = 0;
  friend bool operator==(const U2Kind&, const U2Kind&) = default;
};
struct U3Kind {
  u64 m = 0;
  friend bool operator==(const U3Kind&, const U3Kind&) = default;
};
struct CompleteKind {
  u64 size = 0;
  friend bool operator==(const CompleteKind&, const CompleteKind&) = default;
};
struct IsolatedKind {
  u64 size = 0;
  friend bool operator==(const IsolatedKind&, const IsolatedKind&) = default;
};
struct TrivialKKind {
  friend bool operator==(const TrivialKKind&, const TrivialKKind&) = default;
};
struct TrivialSKind {
  friend bool operator==(const TrivialSKind&, const TrivialSKind&) = default;
};
struct SKind {
  u64 p = 0, q = 0;
  friend bool operator==(const SKind&, const SKind&) = default;
};
struct S2Kind {
  std::vector<std::pair<u64, u64>> pairs;  // (p_i, q_i), p strictly decreasing
  friend bool operator==(const S2Kind&, const S2Kind&) = default;
};
struct S3Kind {
  u64 p = 0, q1 = 0, q2 = 0;
  friend bool operator==(const S3Kind&, const S3Kind&) = default;
};
struct S4Kind {
  u64 p = 0, q = 0;
  friend bool operator==(const S4Kind&, const S4Kind&) = default;
};

using UnigraphKind =
    std::variant<C5Kind, MK2Kind, U2Kind, U3Kind, CompleteKind, IsolatedKind,
                 TrivialKKind, TrivialSKind, SKind, S2Kind, S3Kind, S4Kind>;

struct ClassifiedComponent {
  UnigraphKind kind;
  RelativeTag relative = RelativeTag::identity;
  u64 dist = 1;

  friend bool operator==(const ClassifiedComponent&, const ClassifiedComponent&) = default;
};

struct UnigraphReport {
  std::vector<ClassifiedComponent> components;  // leftmost-first, one per compact component
  u64 dist = 1;
};

namespace detail {

struct NonsplitMatch {
  UnigraphKind kind;
  u64 dist;
};

/// Matches one non-split family form exactly; the caller handles the
/// complement fallback.
inline std::optional<NonsplitMatch> match_nonsplit(const DegreeSequence& seq) {
  const auto& e = seq.entries;
  if (e.size() == 1) {
    if (e[0].degree == 2 && e[0].count == 5) return NonsplitMatch{C5Kind{}, 3};
    if (e[0].degree == 1 && e[0].count >= 4 && e[0].count % 2 == 0) {
      const u64 m = e[0].count / 2;
      return NonsplitMatch{MK2Kind{m}, find_dist_mk2(m)};
    }
    return std::nullopt;
  }
  if (e.size() == 2 && e[0].count == 1 && e[1].count > 1) {
    const u64 d1 = e[0].degree;
    const u64 r2 = e[1].count;
    if (e[1].degree == 1) {
      // U2(m, l) = mK2 + a star with l >= 2 leaves, sequence (l, 1^{2m+l}).
      if (r2 >= d1 + 2 && (r2 - d1) % 2 == 0) {
        const u64 m = (r2 - d1) / 2;
        return NonsplitMatch{U2Kind{m, d1}, std::max(find_dist_mk2(m), d1)};
      }
      return std::nullopt;
    }
    if (e[1].degree == 2) {
      // U3(m), sequence (2m+2, 2^{2m+3}).
      if (d1 >= 4 && d1 % 2 == 0 && r2 == d1 + 1) {
        const u64 m = (d1 - 2) / 2;
        return NonsplitMatch{U3Kind{m}, find_dist_mk2(m)};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Matches an indecomposable non-split component against C5 / mK2 / U2 / U3,
/// consulting the complement when the sequence itself fits no family.
/// Empty result means the component (and so the whole input) is not a unigraph.
inline std::optional<ClassifiedComponent> classify_nonsplit(const DegreeSequence& seq) {
  if (auto m = detail::match_nonsplit(seq))
    return ClassifiedComponent{m->kind, RelativeTag::identity, m->dist};
  if (auto m = detail::match_nonsplit(complement_sequence(seq)))
    return ClassifiedComponent{m->kind, RelativeTag::complement, m->dist};
  return std::nullopt;
}

namespace detail {

inline bool is_single_run(const DegreeSequence& part, u64 degree) {
  return part.entries.size() == 1 && part.entries[0].degree == degree;
}

inline std::optional<ClassifiedComponent> match_s(const PairedDegreeSequence& ps,
                                                  RelativeTag tag) {
  // ((p+q-1)^q ; 1^{pq})
  if (ps.k_part.entries.size() != 1 || !is_single_run(ps.s_part, 1)) return std::nullopt;
  const u64 d1 = ps.k_part.entries[0].degree;
  const u64 q = ps.k_part.entries[0].count;
  const u64 r2 = ps.s_part.entries[0].count;
  if (q < 2 || r2 % q != 0) return std::nullopt;
  const u64 p = r2 / q;
  if (p < 1 || d1 != p + q - 1) return std::nullopt;
  return ClassifiedComponent{SKind{p, q}, tag, find_dist_s(p, q)};
}

inline std::optional<ClassifiedComponent> match_s2(const PairedDegreeSequence& ps,
                                                   RelativeTag tag) {
  // ((p_1+N-1)^{q_1}, ..., (p_m+N-1)^{q_m} ; 1^{sum p_i q_i}), N = sum q_i
  if (ps.k_part.entries.size() < 2 || !is_single_run(ps.s_part, 1)) return std::nullopt;
  const u64 n_centers = ps.a();
  u64 leaves = 0;
  S2Kind kind;
  u64 dist = 1;
  for (const auto& run : ps.k_part.entries) {
    if (run.degree < n_centers) return std::nullopt;  // p_i >= 1
    const u64 p = run.degree - n_centers + 1;
    const u64 q = run.count;
    kind.pairs.emplace_back(p, q);
    leaves += p * q;
    dist = std::max(dist, find_dist_s(p, q));
  }
  if (leaves != ps.s_part.entries[0].count) return std::nullopt;
  return ClassifiedComponent{std::move(kind), tag, dist};
}

inline std::optional<ClassifiedComponent> match_s3(const PairedDegreeSequence& ps,
                                                   RelativeTag tag) {
  // ((p+q1+q2)^{q1+q2} ; q1, 1^{pq1+(p+1)q2})
  if (ps.k_part.entries.size() != 1 || ps.s_part.entries.size() != 2) return std::nullopt;
  if (ps.s_part.entries[0].count != 1 || ps.s_part.entries[1].degree != 1) return std::nullopt;
  const u64 d1 = ps.k_part.entries[0].degree;
  const u64 r1 = ps.k_part.entries[0].count;
  const u64 q1 = ps.s_part.entries[0].degree;
  const u64 r3 = ps.s_part.entries[1].count;
  if (d1 <= r1 || r1 <= q1 || q1 < 2) return std::nullopt;
  const u64 p = d1 - r1;
  const u64 q2 = r1 - q1;
  if (r3 != p * q1 + (p + 1) * q2) return std::nullopt;
  return ClassifiedComponent{S3Kind{p, q1, q2}, tag,
                             std::max(find_dist_s(p, q1), find_dist_s(p + 1, q2))};
}

inline std::optional<ClassifiedComponent> match_s4(const PairedDegreeSequence& ps,
                                                   RelativeTag tag) {
  // (2(p+q+1)+qp, (p+q+3)^{q+2} ; 2^{qp+2p+q+1})
  if (ps.k_part.entries.size() != 2 || !is_single_run(ps.s_part, 2)) return std::nullopt;
  if (ps.k_part.entries[0].count != 1 || ps.k_part.entries[1].count <= 1) return std::nullopt;
  const u64 d1 = ps.k_part.entries[0].degree;
  const u64 d2 = ps.k_part.entries[1].degree;
  const u64 r2 = ps.k_part.entries[1].count;
  const u64 r3 = ps.s_part.entries[0].count;
  if (r2 < 3 || d2 < r2 + 2) return std::nullopt;  // q >= 1, p >= 1
  const u64 p = d2 - r2 - 1;
  const u64 q = r2 - 2;
  if (d1 != 2 * (p + q + 1) + q * p) return std::nullopt;
  if (r3 != q * p + 2 * p + q + 1) return std::nullopt;
  return ClassifiedComponent{S4Kind{p, q}, tag,
                             std::max(find_dist_s(p, 2), find_dist_s(p + 1, q))};
}

}  // namespace detail

/// Matches an indecomposable split component against the S / S2 / S3 / S4
/// families. Each form is tried across the component and its three relatives
/// in a fixed order (identity, complement, inverse, complement-of-inverse);
/// the S4 form is attempted only after the others fail everywhere. Parameter
/// constraints are re-validated, so a non-unigraph sequence yields an empty
/// result rather than a bogus number.
inline std::optional<ClassifiedComponent> classify_split(const PairedDegreeSequence& pseq) {
  if (pseq.vertex_count() == 1) {
    if (pseq.k_part.vertex_count() == 1)
      return ClassifiedComponent{TrivialKKind{}, RelativeTag::identity, 1};
    return ClassifiedComponent{TrivialSKind{}, RelativeTag::identity, 1};
  }
  const RelativeSet rels = relatives(pseq);
  using Matcher = std::optional<ClassifiedComponent> (*)(const PairedDegreeSequence&, RelativeTag);
  for (Matcher matcher : {static_cast<Matcher>(&detail::match_s),
                          static_cast<Matcher>(&detail::match_s2),
                          static_cast<Matcher>(&detail::match_s3),
                          static_cast<Matcher>(&detail::match_s4)}) {
    for (RelativeTag tag : all_relative_tags)
      if (auto c = matcher(rels[tag], tag)) return c;
  }
  return std::nullopt;
}

/// Distinguishing number of an indecomposable split component.
inline std::optional<u64> find_dist_split(const PairedDegreeSequence& pseq) {
  if (auto c = classify_split(pseq)) return c->dist;
  return std::nullopt;
}

/// Classifies one component of a compact decomposition: complete and isolated
/// blocks directly, split components through the family scan, and the tail
/// through the split check with the non-split families as fallback.
inline std::optional<ClassifiedComponent> classify_component(const Component& comp) {
  if (auto m = as_complete_block(comp)) {
    if (*m == 1) return ClassifiedComponent{TrivialKKind{}, RelativeTag::identity, 1};
    return ClassifiedComponent{CompleteKind{*m}, RelativeTag::identity, *m};
  }
  if (auto m = as_isolated_block(comp)) {
    if (*m == 1) return ClassifiedComponent{TrivialSKind{}, RelativeTag::identity, 1};
    return ClassifiedComponent{IsolatedKind{*m}, RelativeTag::identity, *m};
  }
  if (const auto* split = std::get_if<SplitComponent>(&comp))
    return classify_split(split->pseq);

  const auto& seq = std::get<TailComponent>(comp).seq;
  if (seq.vertex_count() == 1)
    return ClassifiedComponent{TrivialSKind{}, RelativeTag::identity, 1};
  if (auto si = determine_split(seq)) return classify_split(si->paired);
  return classify_nonsplit(seq);
}

/// Full pipeline: compact decomposition, per-component classification, and
/// the maximum of the component distinguishing numbers. Empty result means
/// some component matched no family, i.e. the input is not a unigraph.
///
/// Components are classified inside the emission pass, without materializing
/// the compact list: a large threshold-like input has a component list far
/// bigger than any cache level, but each component only needs a glance.
inline std::optional<UnigraphReport> find_dist_unigraph(const DegreeSequence& seq) {
  const std::vector<u64> master = expand(seq);

  u64 count = 0;
  detail::compact_stream(
      master, [&](bool, u64) { ++count; },
      [&](u64, u64, std::span<const u64>, std::span<const u64>) { ++count; },
      [&](std::span<const u64>, u64) { ++count; });

  UnigraphReport report;
  report.components.reserve(count);
  report.dist = 1;
  bool ok = true;

  const auto record = [&](std::optional<ClassifiedComponent> c) {
    if (!ok) return;
    if (!c) {
      ok = false;
      return;
    }
    report.dist = std::max(report.dist, c->dist);
    report.components.push_back(std::move(*c));
  };
  detail::compact_stream(
      master,
      [&](bool complete, u64 m) {
        if (m == 1)
          record(ClassifiedComponent{complete ? UnigraphKind{TrivialKKind{}}
                                              : UnigraphKind{TrivialSKind{}},
                                     RelativeTag::identity, 1});
        else
          record(ClassifiedComponent{complete ? UnigraphKind{CompleteKind{m}}
                                              : UnigraphKind{IsolatedKind{m}},
                                     RelativeTag::identity, m});
      },
      [&](u64 alpha, u64 beta, std::span<const u64> k_slice, std::span<const u64> s_slice) {
        if (!ok) return;
        record(classify_split(
            PairedDegreeSequence{DegreeSequence{detail::adjusted_runs(k_slice, beta + alpha)},
                                 DegreeSequence{detail::adjusted_runs(s_slice, beta)}}));
      },
      [&](std::span<const u64> slice, u64 beta) {
        if (!ok) return;
        record(classify_component(
            TailComponent{DegreeSequence{detail::adjusted_runs(slice, beta)}}));
      });

  if (!ok) return std::nullopt;
  return report;
}

/// Threshold shortcut: the answer is the largest compact component. Empty
/// result when some component is a non-trivial indecomposable graph, i.e. the
/// input is not a threshold sequence.
inline std::optional<u64> threshold_dist(const DegreeSequence& seq) {
  const DecompositionResult compact = decompose_compact(seq);
  u64 best = 1;
  for (const auto& comp : compact.components) {
    if (auto m = as_complete_block(comp))
      best = std::max(best, *m);
    else if (auto m = as_isolated_block(comp))
      best = std::max(best, *m);
    else if (const auto* tail = std::get_if<TailComponent>(&comp);
             tail && tail->seq.vertex_count() == 1)
      best = std::max<u64>(best, 1);
    else
      return std::nullopt;
  }
  return best;
}

/// Short human-readable family label, parameters included.
inline std::string describe(const UnigraphKind& kind) {
  struct Visitor {
    std::string operator()(const C5Kind&) const { return "C5"; }
    std::string operator()(const MK2Kind& k) const { return "mK2(" + std::to_string(k.m) + ")"; }
    std::string operator()(const U2Kind& k) const {
      return "U2(" + std::to_string(k.m) + "," + std::to_string(k.l) + ")";
    }
    std::string operator()(const U3Kind& k) const { return "U3(" + std::to_string(k.m) + ")"; }
    std::string operator()(const CompleteKind& k) const {
      return "complete(" + std::to_string(k.size) + ")";
    }
    std::string operator()(const IsolatedKind& k) const {
      return "isolated(" + std::to_string(k.size) + ")";
    }
    std::string operator()(const TrivialKKind&) const { return "K1"; }
    std::string operator()(const TrivialSKind&) const { return "S1"; }
    std::string operator()(const SKind& k) const {
      return "S(" + std::to_string(k.p) + "," + std::to_string(k.q) + ")";
    }
    std::string operator()(const S2Kind& k) const {
      std::string out = "S2(";
      for (std::size_t i = 0; i < k.pairs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(k.pairs[i].first) + "," + std::to_string(k.pairs[i].second);
      }
      return out + ")";
    }
    std::string operator()(const S3Kind& k) const {
      return "S3(" + std::to_string(k.p) + "," + std::to_string(k.q1) + "," +
             std::to_string(k.q2) + ")";
    }
    std::string operator()(const S4Kind& k) const {
      return "S4(" + std::to_string(k.p) + "," + std::to_string(k.q) + ")";
    }
  };
  return std::visit(Visitor{}, kind);
}

/// Bare family name, used as the JSON kind string.
inline std::string kind_name(const UnigraphKind& kind) {
  struct Visitor {
    std::string operator()(const C5Kind&) const { return "C5"; }
    std::string operator()(const MK2Kind&) const { return "mK2"; }
    std::string operator()(const U2Kind&) const { return "U2"; }
    std::string operator()(const U3Kind&) const { return "U3"; }
    std::string operator()(const CompleteKind&) const { return "complete"; }
    std::string operator()(const IsolatedKind&) const { return "isolated"; }
    std::string operator()(const TrivialKKind&) const { return "K1"; }
    std::string operator()(const TrivialSKind&) const { return "S1"; }
    std::string operator()(const SKind&) const { return "S"; }
    std::string operator()(const S2Kind&) const { return "S2"; }
    std::string operator()(const S3Kind&) const { return "S3"; }
    std::string operator()(const S4Kind&) const { return "S4"; }
  };
  return std::visit(Visitor{}, kind);
}

}  // namespace unidist
