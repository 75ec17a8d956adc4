#include "unidist/graph.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "test_util.hpp"
#include "unidist/families.hpp"
#include "unidist/oracle.hpp"

using namespace unidist;
using testutil::pseq;
using testutil::seq;

namespace {

// Expected degree sequences straight from the family definitions; the
// constructions must reproduce these exactly.
DegreeSequence expected_sequence(const UnigraphKind& kind) {
  if (std::holds_alternative<C5Kind>(kind)) return seq("2^5");
  if (const auto* k = std::get_if<MK2Kind>(&kind)) return make_sequence({{1, 2 * k->m}});
  if (const auto* k = std::get_if<U2Kind>(&kind))
    return make_sequence({{k->l, 1}, {1, 2 * k->m + k->l}});
  if (const auto* k = std::get_if<U3Kind>(&kind))
    return make_sequence({{2 * k->m + 2, 1}, {2, 2 * k->m + 3}});
  ADD_FAILURE() << "expected_sequence: not a non-split kind";
  return seq("0");
}

PairedDegreeSequence expected_paired(const UnigraphKind& kind) {
  if (const auto* k = std::get_if<CompleteKind>(&kind))
    return make_paired({{k->size - 1, k->size}}, {});
  if (const auto* k = std::get_if<IsolatedKind>(&kind)) return make_paired({}, {{0, k->size}});
  if (const auto* k = std::get_if<SKind>(&kind))
    return make_paired({{k->p + k->q - 1, k->q}}, {{1, k->p * k->q}});
  if (const auto* k = std::get_if<S2Kind>(&kind)) {
    u64 n_centers = 0, leaves = 0;
    for (const auto& [p, q] : k->pairs) {
      n_centers += q;
      leaves += p * q;
    }
    RunList k_runs;
    for (const auto& [p, q] : k->pairs) k_runs.push_back({p + n_centers - 1, q});
    return make_paired(std::move(k_runs), {{1, leaves}});
  }
  if (const auto* k = std::get_if<S3Kind>(&kind))
    return make_paired({{k->p + k->q1 + k->q2, k->q1 + k->q2}},
                       {{k->q1, 1}, {1, k->p * k->q1 + (k->p + 1) * k->q2}});
  if (const auto* k = std::get_if<S4Kind>(&kind))
    return make_paired(
        {{2 * (k->p + k->q + 1) + k->q * k->p, 1}, {k->p + k->q + 3, k->q + 2}},
        {{2, k->q * k->p + 2 * k->p + k->q + 1}});
  ADD_FAILURE() << "expected_paired: not a split kind";
  return pseq("0;-");
}

}  // namespace

TEST(Graph, BasicEdgeBookkeeping) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_THROW(g.add_edge(0, 0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
}

TEST(DegreeSequenceOf, FamilyExamples) {
  EXPECT_EQ(degree_sequence_of(make_family(C5Kind{})), seq("2^5"));
  EXPECT_EQ(degree_sequence_of(make_family(MK2Kind{2})), seq("1^4"));
  EXPECT_EQ(degree_sequence_of(make_family(S3Kind{1, 3, 2})), seq("6^5,3,1^7"));
}

TEST(Complement, TwoEdgesBecomeFourCycle) {
  const Graph c4 = [] {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    return g;
  }();
  EXPECT_TRUE(brute_isomorphic(complement(make_family(MK2Kind{2})), c4));
}

TEST(Complement, CompleteBecomesEmpty) {
  EXPECT_EQ(complement(make_family(CompleteKind{4})), make_family(IsolatedKind{4}));
}

TEST(Complement, FiveCycleSelfComplementary) {
  const Graph c5 = make_family(C5Kind{});
  EXPECT_TRUE(brute_isomorphic(complement(c5), c5));
  EXPECT_EQ(complement(complement(c5)), c5);
}

TEST(SplitInverse, PathMapsToPath) {
  // P4 with the two middle vertices as the clique side.
  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  const SplitGraphWithPartition sg{p4, {1, 2}, {0, 3}};
  ASSERT_TRUE(is_valid_partition(sg));
  const auto inv = split_inverse(sg);
  EXPECT_TRUE(brute_isomorphic(inv.graph, p4));
}

TEST(SplitInverse, TriangleWithFullCliqueEmpties) {
  const SplitGraphWithPartition sg = make_split_family(CompleteKind{3});
  const auto inv = split_inverse(sg);
  EXPECT_EQ(inv.graph.edge_count(), 0u);
  EXPECT_EQ(inv.b_set, sg.a_set);
}

TEST(SplitInverse, IsAnInvolution) {
  for (const auto& kind : testutil::small_family_kinds(9)) {
    if (!testutil::is_split_kind(kind)) continue;
    const SplitGraphWithPartition sg = make_split_family(kind);
    const auto twice = split_inverse(split_inverse(sg));
    EXPECT_EQ(twice.graph, sg.graph);
    EXPECT_EQ(twice.a_set, sg.a_set);
    EXPECT_EQ(twice.b_set, sg.b_set);
  }
}

TEST(SplitInverse, RejectsInvalidPartition) {
  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  EXPECT_THROW(split_inverse(SplitGraphWithPartition{p4, {0, 3}, {1, 2}}),
               std::invalid_argument);
}

TEST(Compose, DominantVertexMakesTriangle) {
  const SplitGraphWithPartition dominant{Graph(1), {0}, {}};
  const Graph k2 = make_family(CompleteKind{2});
  EXPECT_TRUE(brute_isomorphic(compose(dominant, k2), make_family(CompleteKind{3})));
}

TEST(Compose, IsolatedVertexStaysApart) {
  const SplitGraphWithPartition isolated{Graph(1), {}, {0}};
  const Graph k2 = make_family(CompleteKind{2});
  const Graph got = compose(isolated, k2);
  EXPECT_EQ(got.edge_count(), 1u);
  EXPECT_EQ(got.degree(0), 0u);
}

TEST(Compose, ThresholdExampleSequence) {
  const Graph g =
      compose(make_split_family(CompleteKind{2}), make_family(IsolatedKind{4}));
  EXPECT_EQ(degree_sequence_of(g), seq("5^2,2^4"));
}

TEST(Compose, AssociativeOnThreeChains) {
  SplitMix64 rng(5);
  for (int iter = 0; iter < 20; ++iter) {
    const auto kinds = testutil::small_family_kinds(8);
    UnigraphKind a = kinds[rng.below(kinds.size())];
    UnigraphKind b = kinds[rng.below(kinds.size())];
    if (!testutil::is_split_kind(a) || !testutil::is_split_kind(b)) continue;
    const SplitGraphWithPartition sa = make_split_family(a);
    const SplitGraphWithPartition sb = make_split_family(b);
    const Graph g0 = make_family(kinds[rng.below(kinds.size())]);
    const Graph left = compose(compose_split(sa, sb), g0);
    const Graph right = compose(sa, compose(sb, g0));
    EXPECT_EQ(left, right);
  }
}

TEST(MakeFamily, NonSplitSequencesMatchDefinitions) {
  for (const auto& kind : testutil::small_family_kinds(12)) {
    if (testutil::is_split_kind(kind)) continue;
    EXPECT_EQ(degree_sequence_of(make_family(kind)), expected_sequence(kind));
  }
}

TEST(MakeFamily, SplitSequencesMatchDefinitions) {
  for (const auto& kind : testutil::small_family_kinds(12)) {
    if (!testutil::is_split_kind(kind)) continue;
    const SplitGraphWithPartition sg = make_split_family(kind);
    EXPECT_TRUE(is_valid_partition(sg));
    EXPECT_EQ(paired_sequence_of(sg), expected_paired(kind));
  }
}

TEST(MakeFamily, StarFamiliesAreBalanced) {
  for (const auto& kind : testutil::small_family_kinds(12)) {
    const bool star_family =
        std::holds_alternative<SKind>(kind) || std::holds_alternative<S2Kind>(kind) ||
        std::holds_alternative<S3Kind>(kind) || std::holds_alternative<S4Kind>(kind);
    if (!star_family) continue;
    EXPECT_EQ(swing_info(paired_sequence_of(make_split_family(kind))),
              (SwingInfo{false, false}));
  }
}

TEST(MakeFamily, RejectsBadParameters) {
  EXPECT_THROW(make_family(MK2Kind{1}), std::invalid_argument);
  EXPECT_THROW(make_family(U2Kind{0, 2}), std::invalid_argument);
  EXPECT_THROW(make_family(U2Kind{1, 1}), std::invalid_argument);
  EXPECT_THROW(make_family(U3Kind{0}), std::invalid_argument);
  EXPECT_THROW(make_family(SKind{1, 1}), std::invalid_argument);
  EXPECT_THROW(make_family(SKind{0, 2}), std::invalid_argument);
  EXPECT_THROW(make_family(S2Kind{{{2, 1}}}), std::invalid_argument);
  EXPECT_THROW(make_family(S2Kind{{{2, 1}, {2, 1}}}), std::invalid_argument);
  EXPECT_THROW(make_family(S3Kind{1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(make_family(S4Kind{0, 1}), std::invalid_argument);
  EXPECT_THROW(make_family(CompleteKind{0}), std::invalid_argument);
}

TEST(RandomThreshold, SingleVertex) {
  EXPECT_EQ(random_threshold(3, 1).vertex_count(), 1u);
  EXPECT_EQ(random_threshold(3, 1).edge_count(), 0u);
}

TEST(RandomThreshold, DeterministicAndSequenceConsistent) {
  for (u64 s = 0; s < 30; ++s) {
    const u64 n = 1 + s % 12;
    EXPECT_EQ(random_threshold(s, n), random_threshold(s, n));
    EXPECT_EQ(degree_sequence_of(random_threshold(s, n)), threshold_degree_sequence(s, n));
  }
}

TEST(RandomUnigraph, DeterministicForFixedSeed) {
  for (u64 s = 0; s < 10; ++s)
    EXPECT_EQ(random_unigraph(s, 3, 9), random_unigraph(s, 3, 9));
}

TEST(RandomUnigraph, RespectsBudgets) {
  for (u64 s = 0; s < 50; ++s) {
    const auto gen = random_unigraph_traced(s, 4, 9);
    EXPECT_LE(gen.graph.vertex_count(), 9u);
    EXPECT_GE(gen.graph.vertex_count(), 1u);
    EXPECT_LE(gen.expected_compact.size(), 4u);
    u64 total = 0;
    for (const auto& c : gen.expected_compact) total += component_vertex_count(c);
    EXPECT_EQ(total, gen.graph.vertex_count());
  }
}
