#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace unidist {

using u64 = std::uint64_t;

/// One run of an abbreviated degree sequence: `count` vertices of equal `degree`.
struct DegreeRun {
  u64 degree = 0;
  u64 count = 0;

  friend bool operator==(const DegreeRun&, const DegreeRun&) = default;
};

/// Degree-run array with the single-run case stored inline. Decompositions of
/// large threshold-like sequences produce millions of one-run component
/// parts; keeping those out of the heap keeps the pipeline memory-lean.
class RunList {
 public:
  using value_type = DegreeRun;
  using iterator = DegreeRun*;
  using const_iterator = const DegreeRun*;

  RunList() = default;

  RunList(std::initializer_list<DegreeRun> runs) { assign(runs.begin(), runs.end()); }

  template <typename It>
    requires(!std::is_same_v<std::decay_t<It>, RunList>)
  RunList(It first, It last) {
    assign(first, last);
  }

  RunList(const RunList& other) { assign(other.begin(), other.end()); }

  RunList(RunList&& other) noexcept : size_(other.size_), cap_(other.cap_) {
    if (cap_ > 1)
      heap_ = other.heap_;
    else
      one_ = other.one_;
    other.size_ = 0;
    other.cap_ = 1;
  }

  RunList& operator=(const RunList& other) {
    if (this != &other) {
      clear_storage();
      assign(other.begin(), other.end());
    }
    return *this;
  }

  RunList& operator=(RunList&& other) noexcept {
    if (this != &other) {
      clear_storage();
      size_ = other.size_;
      cap_ = other.cap_;
      if (cap_ > 1)
        heap_ = other.heap_;
      else
        one_ = other.one_;
      other.size_ = 0;
      other.cap_ = 1;
    }
    return *this;
  }

  ~RunList() { clear_storage(); }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  DegreeRun* data() { return cap_ > 1 ? heap_ : &one_; }
  const DegreeRun* data() const { return cap_ > 1 ? heap_ : &one_; }

  iterator begin() { return data(); }
  iterator end() { return data() + size_; }
  const_iterator begin() const { return data(); }
  const_iterator end() const { return data() + size_; }
  std::reverse_iterator<const_iterator> rbegin() const {
    return std::reverse_iterator<const_iterator>(end());
  }
  std::reverse_iterator<const_iterator> rend() const {
    return std::reverse_iterator<const_iterator>(begin());
  }

  DegreeRun& operator[](std::size_t i) { return data()[i]; }
  const DegreeRun& operator[](std::size_t i) const { return data()[i]; }
  DegreeRun& front() { return data()[0]; }
  const DegreeRun& front() const { return data()[0]; }
  DegreeRun& back() { return data()[size_ - 1]; }
  const DegreeRun& back() const { return data()[size_ - 1]; }

  void push_back(const DegreeRun& run) {
    if (size_ == cap_) grow();
    data()[size_++] = run;
  }

  friend bool operator==(const RunList& a, const RunList& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }

 private:
  template <typename It>
  void assign(It first, It last) {
    const std::size_t n = static_cast<std::size_t>(std::distance(first, last));
    if (n > 1) {
      heap_ = new DegreeRun[n];
      cap_ = static_cast<std::uint32_t>(n);
      std::copy(first, last, heap_);
    } else if (n == 1) {
      one_ = *first;
    }
    size_ = static_cast<std::uint32_t>(n);
  }

  void grow() {
    const std::uint32_t new_cap = cap_ > 1 ? cap_ * 2 : 2;
    DegreeRun* fresh = new DegreeRun[new_cap];
    std::copy(begin(), end(), fresh);
    clear_storage();
    heap_ = fresh;
    cap_ = new_cap;
  }

  void clear_storage() {
    if (cap_ > 1) delete[] heap_;
    cap_ = 1;
  }

  std::uint32_t size_ = 0;
  std::uint32_t cap_ = 1;  // 1 means inline storage
  union {
    DegreeRun one_ = {};
    DegreeRun* heap_;
  };
};

/// Abbreviated degree sequence: runs with strictly decreasing degrees and
/// positive multiplicities. The empty sequence is reserved for the parts of a
/// PairedDegreeSequence; standalone sequences have at least one run.
struct DegreeSequence {
  RunList entries;

  u64 vertex_count() const {
    u64 n = 0;
    for (const auto& e : entries) n += e.count;
    return n;
  }

  u64 degree_sum() const {
    u64 s = 0;
    for (const auto& e : entries) s += e.degree * e.count;
    return s;
  }

  bool empty() const { return entries.empty(); }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

/// Degree runs of a KS-partition: k_part holds the clique side, s_part the
/// stable side. Either part may be empty, not both.
struct PairedDegreeSequence {
  DegreeSequence k_part;
  DegreeSequence s_part;

  /// Clique-side vertex count |A|.
  u64 a() const { return k_part.vertex_count(); }
  /// Stable-side vertex count |B|.
  u64 b() const { return s_part.vertex_count(); }
  u64 vertex_count() const { return a() + b(); }

  friend bool operator==(const PairedDegreeSequence&, const PairedDegreeSequence&) = default;
};

struct SplitInfo {
  u64 h = 0;  // clique number of any realization
  PairedDegreeSequence paired;

  friend bool operator==(const SplitInfo&, const SplitInfo&) = default;
};

/// Engaged when the sequence is that of a split graph, empty otherwise.
using SplitCheckResult = std::optional<SplitInfo>;

enum class RelativeTag : int {
  identity = 0,
  complement = 1,
  inverse = 2,
  complement_inverse = 3,
};

inline const char* to_string(RelativeTag t) {
  switch (t) {
    case RelativeTag::identity: return "identity";
    case RelativeTag::complement: return "complement";
    case RelativeTag::inverse: return "inverse";
    case RelativeTag::complement_inverse: return "complement_inverse";
  }
  return "?";
}

inline constexpr std::array<RelativeTag, 4> all_relative_tags = {
    RelativeTag::identity,
    RelativeTag::complement,
    RelativeTag::inverse,
    RelativeTag::complement_inverse,
};

/// The four relatives of a split graph's paired degree sequence, indexed by tag.
struct RelativeSet {
  std::array<PairedDegreeSequence, 4> seqs;

  const PairedDegreeSequence& operator[](RelativeTag t) const {
    return seqs[static_cast<int>(t)];
  }
};

struct SwingInfo {
  bool k_side = false;  // some clique vertex of degree |A|-1
  bool s_side = false;  // some stable vertex of degree |A|

  friend bool operator==(const SwingInfo&, const SwingInfo&) = default;
};

namespace detail {

inline void validate_runs(const RunList& runs) {
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].count == 0) throw std::invalid_argument("degree run with zero multiplicity");
    if (i > 0 && runs[i - 1].degree <= runs[i].degree)
      throw std::invalid_argument("degrees must be strictly decreasing");
  }
}

/// Merges a descending-sorted flat list into runs. The input must already be
/// sorted; callers sort when needed.
inline RunList runs_from_sorted(const std::vector<u64>& desc) {
  RunList out;
  for (u64 d : desc) {
    if (!out.empty() && out.back().degree == d)
      ++out.back().count;
    else
      out.push_back({d, 1});
  }
  return out;
}

}  // namespace detail

/// Builds the abbreviated descending form of an arbitrary degree list.
inline DegreeSequence abbreviate(std::vector<u64> degrees) {
  if (degrees.empty()) throw std::invalid_argument("abbreviate: empty degree list");
  std::sort(degrees.begin(), degrees.end(), std::greater<u64>());
  DegreeSequence seq{detail::runs_from_sorted(degrees)};
  const u64 n = seq.vertex_count();
  if (seq.entries.front().degree >= n)
    throw std::invalid_argument("abbreviate: degree exceeds vertex count - 1");
  return seq;
}

/// Flat descending degree list; inverse of abbreviate up to sorting.
inline std::vector<u64> expand(const DegreeSequence& seq) {
  std::vector<u64> out;
  out.reserve(seq.vertex_count());
  for (const auto& e : seq.entries)
    for (u64 i = 0; i < e.count; ++i) out.push_back(e.degree);
  return out;
}

/// Builds a sequence directly from runs, validating the invariants.
inline DegreeSequence make_sequence(RunList runs) {
  detail::validate_runs(runs);
  DegreeSequence seq{std::move(runs)};
  if (!seq.entries.empty() && seq.entries.front().degree >= seq.vertex_count())
    throw std::invalid_argument("degree exceeds vertex count - 1");
  return seq;
}

inline PairedDegreeSequence make_paired(RunList k_runs, RunList s_runs) {
  detail::validate_runs(k_runs);
  detail::validate_runs(s_runs);
  if (k_runs.empty() && s_runs.empty())
    throw std::invalid_argument("paired sequence with both parts empty");
  PairedDegreeSequence p{DegreeSequence{std::move(k_runs)}, DegreeSequence{std::move(s_runs)}};
  const u64 n = p.vertex_count();
  for (const auto& e : p.k_part.entries)
    if (e.degree >= n) throw std::invalid_argument("paired degree exceeds vertex count - 1");
  for (const auto& e : p.s_part.entries)
    if (e.degree >= n) throw std::invalid_argument("paired degree exceeds vertex count - 1");
  return p;
}

/// Merges both parts of a paired sequence into one flat abbreviated sequence.
inline DegreeSequence flatten(const PairedDegreeSequence& pseq) {
  std::vector<u64> all = expand(pseq.k_part);
  for (u64 d : expand(pseq.s_part)) all.push_back(d);
  return abbreviate(std::move(all));
}

/// Split-graph test on the degree sequence alone.
///
/// With h = max{i : d_i >= i-1} over the expanded positions, the sequence
/// belongs to a split graph exactly when the first h degrees absorb the full
/// clique plus everything the remaining vertices see:
///   sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i.
/// On success h is the clique number and the paired sequence splits at h.
inline SplitCheckResult determine_split(const DegreeSequence& seq) {
  const u64 n = seq.vertex_count();
  if (n < 2) throw std::invalid_argument("determine_split: need at least 2 vertices");

  u64 h = 0;
  {
    u64 pos = 0;  // expanded vertices consumed so far
    for (const auto& e : seq.entries) {
      const u64 lo = pos + 1;
      if (lo > e.degree + 1) break;
      h = std::min(pos + e.count, e.degree + 1);
      pos += e.count;
    }
  }

  u64 leftsum = 0;
  {
    u64 pos = 0;
    for (const auto& e : seq.entries) {
      if (pos >= h) break;
      const u64 take = std::min(e.count, h - pos);
      leftsum += e.degree * take;
      pos += take;
      if (take < e.count) break;
    }
  }
  const u64 rightsum = seq.degree_sum() - leftsum;
  if (leftsum != h * (h - 1) + rightsum) return std::nullopt;

  // Split the run list at expanded position h.
  RunList k_runs, s_runs;
  u64 pos = 0;
  for (const auto& e : seq.entries) {
    if (pos + e.count <= h) {
      k_runs.push_back(e);
    } else if (pos >= h) {
      s_runs.push_back(e);
    } else {
      k_runs.push_back({e.degree, h - pos});
      s_runs.push_back({e.degree, e.count - (h - pos)});
    }
    pos += e.count;
  }
  return SplitInfo{h, PairedDegreeSequence{DegreeSequence{std::move(k_runs)},
                                           DegreeSequence{std::move(s_runs)}}};
}

/// Degree sequence of the complement graph: d -> n-1-d, order reversed.
inline DegreeSequence complement_sequence(const DegreeSequence& seq) {
  const u64 n = seq.vertex_count();
  RunList runs(seq.entries.rbegin(), seq.entries.rend());
  for (auto& e : runs) e.degree = n - 1 - e.degree;
  return DegreeSequence{std::move(runs)};
}

namespace detail {

inline void validate_split_pseq(const PairedDegreeSequence& pseq) {
  const u64 a = pseq.a();
  for (const auto& e : pseq.k_part.entries)
    if (e.degree + 1 < a)
      throw std::invalid_argument("clique-part degree below |A|-1; not a KS-partition");
  for (const auto& e : pseq.s_part.entries)
    if (e.degree > a)
      throw std::invalid_argument("stable-part degree above |A|; not a KS-partition");
}

inline RunList shifted_runs(const DegreeSequence& part, u64 add, u64 sub) {
  RunList out = part.entries;
  for (auto& e : out) e.degree = e.degree + add - sub;
  return out;
}

inline RunList reflected_runs(const DegreeSequence& part, u64 mirror) {
  RunList out(part.entries.rbegin(), part.entries.rend());
  for (auto& e : out) e.degree = mirror - e.degree;
  return out;
}

}  // namespace detail

/// Paired sequence of the complement: parts swap and every degree reflects
/// across n-1.
inline PairedDegreeSequence complement_paired(const PairedDegreeSequence& pseq) {
  const u64 n = pseq.vertex_count();
  return PairedDegreeSequence{
      DegreeSequence{detail::reflected_runs(pseq.s_part, n - 1)},
      DegreeSequence{detail::reflected_runs(pseq.k_part, n - 1)}};
}

/// Paired sequence of the inverse: clique edges dropped, stable side filled
/// in, parts swap roles. Clique degrees lose |A|-1, stable degrees gain |B|-1.
inline PairedDegreeSequence inverse_paired(const PairedDegreeSequence& pseq) {
  detail::validate_split_pseq(pseq);
  const u64 a = pseq.a();
  const u64 b = pseq.b();
  return PairedDegreeSequence{
      DegreeSequence{detail::shifted_runs(pseq.s_part, b > 0 ? b - 1 : 0, 0)},
      DegreeSequence{detail::shifted_runs(pseq.k_part, 0, a > 0 ? a - 1 : 0)}};
}

/// All four relatives, computed arithmetically on the paired sequence.
inline RelativeSet relatives(const PairedDegreeSequence& pseq) {
  detail::validate_split_pseq(pseq);
  RelativeSet r;
  r.seqs[static_cast<int>(RelativeTag::identity)] = pseq;
  r.seqs[static_cast<int>(RelativeTag::complement)] = complement_paired(pseq);
  r.seqs[static_cast<int>(RelativeTag::inverse)] = inverse_paired(pseq);
  r.seqs[static_cast<int>(RelativeTag::complement_inverse)] =
      complement_paired(inverse_paired(pseq));
  return r;
}

/// Swing-vertex presence, read straight off the paired degrees.
inline SwingInfo swing_info(const PairedDegreeSequence& pseq) {
  const u64 a = pseq.a();
  SwingInfo s;
  for (const auto& e : pseq.k_part.entries)
    if (e.degree + 1 == a) s.k_side = true;
  for (const auto& e : pseq.s_part.entries)
    if (e.degree == a) s.s_side = true;
  return s;
}

}  // namespace unidist
