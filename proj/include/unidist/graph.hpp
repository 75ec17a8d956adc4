#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unidist/degree_sequence.hpp"

namespace unidist {

/// Simple undirected graph on vertex ids 0..n-1, adjacency kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(u64 n) : adj_(n) {}

  u64 vertex_count() const { return adj_.size(); }
  u64 edge_count() const { return edges_; }

  const std::vector<u64>& neighbors(u64 v) const { return adj_.at(v); }

  bool has_edge(u64 u, u64 v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  void add_edge(u64 u, u64 v) {
    if (u >= adj_.size() || v >= adj_.size())
      throw std::invalid_argument("add_edge: vertex id out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    if (has_edge(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++edges_;
  }

  u64 degree(u64 v) const { return adj_.at(v).size(); }

  friend bool operator==(const Graph& g, const Graph& h) {
    return g.adj_ == h.adj_;
  }

 private:
  static void insert_sorted(std::vector<u64>& vec, u64 x) {
    vec.insert(std::upper_bound(vec.begin(), vec.end(), x), x);
  }

  std::vector<std::vector<u64>> adj_;
  u64 edges_ = 0;
};

/// A split graph together with one KS-partition. a_set induces a clique,
/// b_set a stable set; both are kept sorted.
struct SplitGraphWithPartition {
  Graph graph;
  std::vector<u64> a_set;
  std::vector<u64> b_set;
};

inline bool is_valid_partition(const SplitGraphWithPartition& sg) {
  const u64 n = sg.graph.vertex_count();
  std::vector<int> side(n, -1);
  for (u64 v : sg.a_set) {
    if (v >= n || side[v] != -1) return false;
    side[v] = 0;
  }
  for (u64 v : sg.b_set) {
    if (v >= n || side[v] != -1) return false;
    side[v] = 1;
  }
  for (u64 v = 0; v < n; ++v)
    if (side[v] == -1) return false;
  for (std::size_t i = 0; i < sg.a_set.size(); ++i)
    for (std::size_t j = i + 1; j < sg.a_set.size(); ++j)
      if (!sg.graph.has_edge(sg.a_set[i], sg.a_set[j])) return false;
  for (std::size_t i = 0; i < sg.b_set.size(); ++i)
    for (std::size_t j = i + 1; j < sg.b_set.size(); ++j)
      if (sg.graph.has_edge(sg.b_set[i], sg.b_set[j])) return false;
  return true;
}

inline DegreeSequence degree_sequence_of(const Graph& g) {
  std::vector<u64> degs;
  degs.reserve(g.vertex_count());
  for (u64 v = 0; v < g.vertex_count(); ++v) degs.push_back(g.degree(v));
  return abbreviate(std::move(degs));
}

/// Paired degree sequence induced by the partition (each part descending).
inline PairedDegreeSequence paired_sequence_of(const SplitGraphWithPartition& sg) {
  auto part_runs = [&](const std::vector<u64>& verts) {
    std::vector<u64> degs;
    degs.reserve(verts.size());
    for (u64 v : verts) degs.push_back(sg.graph.degree(v));
    std::sort(degs.begin(), degs.end(), std::greater<u64>());
    return detail::runs_from_sorted(degs);
  };
  return PairedDegreeSequence{DegreeSequence{part_runs(sg.a_set)},
                              DegreeSequence{part_runs(sg.b_set)}};
}

inline Graph complement(const Graph& g) {
  const u64 n = g.vertex_count();
  Graph c(n);
  for (u64 u = 0; u < n; ++u)
    for (u64 v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

/// Complement with the partition roles swapped: (G,A,B) -> (comp G, B, A).
inline SplitGraphWithPartition complement_split(const SplitGraphWithPartition& sg) {
  return SplitGraphWithPartition{complement(sg.graph), sg.b_set, sg.a_set};
}

/// Inverse of a split graph: clique edges removed, stable side completed,
/// cross edges kept. Parts swap roles in the result.
inline SplitGraphWithPartition split_inverse(const SplitGraphWithPartition& sg) {
  if (!is_valid_partition(sg))
    throw std::invalid_argument("split_inverse: invalid KS-partition");
  const u64 n = sg.graph.vertex_count();
  std::vector<char> in_a(n, 0);
  for (u64 v : sg.a_set) in_a[v] = 1;
  Graph inv(n);
  for (u64 u = 0; u < n; ++u)
    for (u64 v : sg.graph.neighbors(u))
      if (u < v && in_a[u] != in_a[v]) inv.add_edge(u, v);
  for (std::size_t i = 0; i < sg.b_set.size(); ++i)
    for (std::size_t j = i + 1; j < sg.b_set.size(); ++j)
      inv.add_edge(sg.b_set[i], sg.b_set[j]);
  return SplitGraphWithPartition{std::move(inv), sg.b_set, sg.a_set};
}

/// Split-graph composition: sg keeps its vertex ids, h's ids are shifted by
/// sg's size, and every clique vertex of sg is joined to all of h.
inline Graph compose(const SplitGraphWithPartition& sg, const Graph& h) {
  const u64 n1 = sg.graph.vertex_count();
  const u64 n2 = h.vertex_count();
  Graph out(n1 + n2);
  for (u64 u = 0; u < n1; ++u)
    for (u64 v : sg.graph.neighbors(u))
      if (u < v) out.add_edge(u, v);
  for (u64 u = 0; u < n2; ++u)
    for (u64 v : h.neighbors(u))
      if (u < v) out.add_edge(n1 + u, n1 + v);
  for (u64 a : sg.a_set)
    for (u64 v = 0; v < n2; ++v) out.add_edge(a, n1 + v);
  return out;
}

/// Composition of two partitioned split graphs: the parts union componentwise.
inline SplitGraphWithPartition compose_split(const SplitGraphWithPartition& sg,
                                             const SplitGraphWithPartition& h) {
  const u64 n1 = sg.graph.vertex_count();
  SplitGraphWithPartition out{compose(sg, h.graph), sg.a_set, sg.b_set};
  for (u64 v : h.a_set) out.a_set.push_back(n1 + v);
  for (u64 v : h.b_set) out.b_set.push_back(n1 + v);
  std::sort(out.a_set.begin(), out.a_set.end());
  std::sort(out.b_set.begin(), out.b_set.end());
  return out;
}

}  // namespace unidist
